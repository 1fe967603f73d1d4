mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lgr_exc_core::Status;

use args::{Cli, Command, Format};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match &cli.command {
        Command::Lr(a) => commands::lr(a),
        Command::Bbw(a) => commands::bbw(a),
        Command::Chi(a) => commands::chi_cmd(a),
        Command::Kclass(a) => commands::kclass(a),
        Command::Staircase(a) => commands::staircase(a),
        Command::Verify(a) => commands::verify(a),
        Command::Enumerate(a) => commands::enumerate(a),
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let rendered = serde_json::to_string_pretty(&output.json).expect("serializable output");
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let text = match cli.global.format {
        Format::Json => format!("{rendered}\n"),
        Format::Table => output.table,
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match output.status {
        Some(Status::Fail) => ExitCode::from(EXIT_FAIL),
        _ => ExitCode::SUCCESS,
    }
}
