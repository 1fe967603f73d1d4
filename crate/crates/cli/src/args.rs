use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lgr_exc_core::{Weight, YoungDiagram};

#[derive(Parser, Debug)]
#[command(name = "lgr-exc", version, about = "Cohomology, exceptional objects and staircase complexes on LGr(n, 2n)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Worker threads; results do not depend on this.
    #[arg(long, env = "LGR_EXC_JOBS", global = true)]
    pub jobs: Option<usize>,

    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood-Richardson decomposition or a single coefficient.
    Lr(LrArgs),
    /// Borel-Bott-Weil cohomology of a homogeneous bundle.
    Bbw(BbwArgs),
    /// Euler pairing of two objects.
    Chi(ChiArgs),
    /// Grothendieck class of an exceptional object.
    Kclass(KclassArgs),
    /// Staircase complex of a diagram.
    Staircase(StaircaseArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// List diagrams, collections or staircase shapes.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug)]
pub struct LrArgs {
    #[arg(long)]
    pub lambda: YoungDiagram,
    #[arg(long)]
    pub mu: YoungDiagram,
    /// Report only the coefficient of this diagram.
    #[arg(long)]
    pub nu: Option<YoungDiagram>,
    /// Rank of the underlying space; defaults to the stable rank.
    #[arg(long, conflicts_with = "nu")]
    pub k: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// Relative Grassmannian `Gr(k, n)`.
    Gr,
    /// Isotropic Grassmannian `IGr(w, 2n)`.
    Igr,
    /// Lagrangian Grassmannian `LGr(n, 2n)`.
    Lgr,
}

#[derive(Args, Debug)]
pub struct BbwArgs {
    #[arg(long, value_enum)]
    pub space: Space,
    #[arg(long)]
    pub n: usize,
    /// Comma-separated weight, e.g. `0,0,-2,-4,-4`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Weight,
    /// Weight on the tautological subbundle of `Gr`; `--weight` is then the
    /// quotient part.
    #[arg(long, allow_hyphen_values = true, required_if_eq("space", "gr"))]
    pub mu: Option<Weight>,
    /// Rank of the isotropic subbundle on `IGr`.
    #[arg(long, required_if_eq("space", "igr"))]
    pub w: Option<usize>,
    /// Symplectic diagram on `W^⊥/W`; defaults to the trivial one.
    #[arg(long)]
    pub beta: Option<YoungDiagram>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Exceptional object `E^λ`.
    E,
    /// Dual family `F^λ`.
    F,
    /// Schur functor `Σ^λ U*`.
    Schur,
}

#[derive(Args, Debug)]
pub struct ObjectArgs {
    #[arg(long)]
    pub lambda: YoungDiagram,
    #[arg(long, value_enum, default_value_t = Kind::E)]
    pub kind: Kind,
    /// Block height; defaults to the height of the diagram.
    #[arg(long)]
    pub h: Option<usize>,
    /// Block width; defaults to the width of the diagram.
    #[arg(long)]
    pub w: Option<usize>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i32,
}

#[derive(Args, Debug)]
pub struct ChiArgs {
    #[arg(long)]
    pub n: usize,
    /// First argument, `label[@twist]`, e.g. `2,2@2`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Second argument, `label[@twist]`.
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, value_enum, default_value_t = Kind::E)]
    pub kind: Kind,
    /// Count only invariant cells.
    #[arg(long)]
    pub equivariant: bool,
}

#[derive(Args, Debug)]
pub struct KclassArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub object: ObjectArgs,
}

#[derive(Args, Debug)]
pub struct StaircaseArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub lambda: YoungDiagram,
    /// Block height; defaults to `n + 1 - λ_1`.
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i32,
    /// Run the Euler probe suite and emit a certificate.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gr0,
    Lgr0,
    IgrVan,
    Igr0,
    IgrEq,
    IgrKap,
    QNeg,
    /// Every vanishing lemma.
    Lemmas,
    PropMain,
    IgrEc,
    KpCount,
    KpChi,
    Gram,
    Lefschetz510,
    Closure,
    Steps510,
    /// Every suite.
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suites to run; repeatable.
    #[arg(long, value_enum, required = true)]
    pub suite: Vec<Suite>,
    /// Largest `n` for suites that range over `n`.
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    /// Bound on diagram entries in the lemma suites.
    #[arg(long, default_value_t = 4)]
    pub max_entry: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Listing {
    /// Diagrams in the `h × w` block.
    Block,
    /// The seed collection on `LGr(n, 2n)`.
    Kp,
    /// Admissible staircase shapes.
    Staircases,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub what: Listing,
    #[arg(long, required_if_eq_any([("what", "kp"), ("what", "staircases")]))]
    pub n: Option<usize>,
    #[arg(long, required_if_eq("what", "block"))]
    pub h: Option<usize>,
    #[arg(long, required_if_eq("what", "block"))]
    pub w: Option<usize>,
}
