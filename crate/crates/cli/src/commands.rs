use std::fmt::Write as _;

use lgr_exc_core::bbw::{coh_gr_relative, coh_igr, coh_lgr, ext_lgr};
use lgr_exc_core::diagrams::enumerate_block;
use lgr_exc_core::kclass::{chi, chi_equivariant, kclass_e, kclass_f};
use lgr_exc_core::schur::{dim_gl, dim_sp, lr_coeff, tensor_gl};
use lgr_exc_core::staircase::{admissible_staircases, build_staircase, default_probes, verify_exactness_probe};
use lgr_exc_core::verify::{
    generation_closure, kp_collection, verify_510_steps, verify_gram, verify_igr_ec, verify_kp_chi,
    verify_kp_count, verify_lefschetz_510, verify_lemma, verify_prop_main, Lemma, LemmaBounds,
};
use lgr_exc_core::{Certificate, CohomCell, Error, KClass, Result, Status, YoungDiagram};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::args::{
    BbwArgs, ChiArgs, EnumerateArgs, Kind, KclassArgs, Listing, LrArgs, ObjectArgs, Space, StaircaseArgs, Suite,
    VerifyArgs,
};

/// Result of one command: machine output, human output and, for checks,
/// the verdict.
pub struct Output {
    pub json: Value,
    pub table: String,
    pub status: Option<Status>,
}

impl Output {
    fn plain(json: Value, table: String) -> Self {
        Output { json, table, status: None }
    }

    fn certificate(cert: Certificate, table: String) -> Self {
        Output {
            json: serde_json::to_value(&cert).expect("serializable certificate"),
            table,
            status: Some(cert.status),
        }
    }
}

fn big(v: BigUint) -> Value {
    match v.to_u64() {
        Some(small) => json!(small),
        None => json!(v.to_string()),
    }
}

pub fn lr(args: &LrArgs) -> Result<Output> {
    if let Some(nu) = &args.nu {
        let c = lr_coeff(&args.lambda, &args.mu, nu);
        let json = json!({ "lambda": args.lambda, "mu": args.mu, "nu": nu, "coefficient": c });
        return Ok(Output::plain(json, format!("c({}; {}, {}) = {c}\n", nu, args.lambda, args.mu)));
    }
    let k = args.k.unwrap_or(args.lambda.height() + args.mu.height()).max(1);
    let product = tensor_gl(args.lambda.as_weight(), args.mu.as_weight(), k)?;
    let mut table = format!("{} ⊗ {} over {}\n", args.lambda, args.mu, product.group());
    for (w, m) in product.iter() {
        writeln!(table, "  {m:>6}  {w}").unwrap();
    }
    Ok(Output::plain(serde_json::to_value(&product).expect("serializable"), table))
}

pub fn bbw(args: &BbwArgs) -> Result<Output> {
    let n = args.n;
    let (cell, dim) = match args.space {
        Space::Gr => {
            let mu = args.mu.as_ref().expect("required by the parser");
            let cell = coh_gr_relative(&args.weight, mu, n)?;
            let dim = cell.weight().map(|w| dim_gl(w, n));
            (cell, dim)
        }
        Space::Igr | Space::Lgr => {
            let cell = if args.space == Space::Lgr {
                coh_lgr(&args.weight, n)?
            } else {
                let beta = args.beta.clone().unwrap_or_else(|| YoungDiagram::empty(0));
                coh_igr(&args.weight, &beta, args.w.expect("required by the parser"), n)?
            };
            let dim = match cell.weight() {
                Some(w) => Some(dim_sp(&YoungDiagram::from_weight(w.clone())?, n)?),
                None => None,
            };
            (cell, dim)
        }
    };
    let json = match &cell {
        CohomCell::Zero => json!({ "degree": null, "weight": null, "dim": 0 }),
        CohomCell::NonZero { degree, weight } => {
            json!({ "degree": degree, "weight": weight.to_string(), "dim": big(dim.clone().expect("nonzero cell")) })
        }
    };
    let table = match &cell {
        CohomCell::Zero => "all cohomology vanishes\n".to_string(),
        CohomCell::NonZero { degree, weight } => {
            format!("H^{degree} = V({weight}), dimension {}\n", dim.expect("nonzero cell"))
        }
    };
    Ok(Output::plain(json, table))
}

fn object_class(lambda: &YoungDiagram, kind: Kind, h: Option<usize>, w: Option<usize>, twist: i32, n: usize) -> Result<KClass> {
    let h = h.unwrap_or(lambda.height());
    let w = w.unwrap_or(lambda.width());
    let class = match kind {
        Kind::E => kclass_e(lambda, h, w, n)?,
        Kind::F => kclass_f(lambda, h, w, n)?,
        Kind::Schur => KClass::schur(lambda, n)?,
    };
    Ok(class.twist(twist))
}

/// `label[@twist]`.
fn parse_label(s: &str) -> Result<(YoungDiagram, i32)> {
    let (shape, twist) = match s.split_once('@') {
        Some((shape, t)) => (
            shape,
            t.trim().parse::<i32>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })?,
        ),
        None => (s, 0),
    };
    Ok((shape.parse()?, twist))
}

pub fn chi_cmd(args: &ChiArgs) -> Result<Output> {
    let n = args.n;
    let (la, ta) = parse_label(&args.a)?;
    let (lb, tb) = parse_label(&args.b)?;
    let a = object_class(&la, args.kind, None, None, ta, n)?;
    let b = object_class(&lb, args.kind, None, None, tb, n)?;
    let value = if args.equivariant {
        chi_equivariant(&a, &b).to_string()
    } else {
        chi(&a, &b).to_string()
    };
    let mut json = json!({ "n": n, "a": args.a, "b": args.b, "chi": value, "equivariant": args.equivariant });
    if args.kind == Kind::Schur {
        let graded = ext_lgr(la.padded(n)?.as_weight(), &lb.padded(n)?.as_weight().twist(tb - ta), n)?;
        json["ext"] = serde_json::to_value(&graded).expect("serializable");
    }
    let table = format!("chi({}, {}) = {value}\n", args.a, args.b);
    Ok(Output::plain(json, table))
}

pub fn kclass(args: &KclassArgs) -> Result<Output> {
    let ObjectArgs { lambda, kind, h, w, twist } = &args.object;
    let class = object_class(lambda, *kind, *h, *w, *twist, args.n)?;
    let json = json!({ "n": args.n, "class": class, "rank": class.rank().to_string() });
    let table = format!("{class}\nrank {}\n", class.rank());
    Ok(Output::plain(json, table))
}

pub fn staircase(args: &StaircaseArgs) -> Result<Output> {
    let n = args.n;
    let w = args.lambda.width();
    let h = args.h.unwrap_or((n + 1).saturating_sub(w));
    let complex = build_staircase(&args.lambda, h, w, n)?.twisted(args.twist);
    let mut table = String::new();
    for t in complex.terms() {
        writeln!(table, "{:>4}  {:>8}  {}", t.position, t.multiplicity, t.description()).unwrap();
    }
    if args.verify {
        let cert = verify_exactness_probe(&complex, &default_probes(n))
            .param("lambda", args.lambda.to_string())
            .param("h", h)
            .param("w", w)
            .param("twist", args.twist);
        writeln!(table, "{}", cert.status).unwrap();
        return Ok(Output::certificate(cert, table));
    }
    Ok(Output::plain(serde_json::to_value(&complex).expect("serializable"), table))
}

fn expand(suites: &[Suite]) -> Vec<Suite> {
    let lemmas = [Suite::Gr0, Suite::Lgr0, Suite::IgrVan, Suite::Igr0, Suite::IgrEq, Suite::IgrKap, Suite::QNeg];
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Lemmas => out.extend(lemmas),
            Suite::All => {
                out.extend(lemmas);
                out.extend([
                    Suite::PropMain,
                    Suite::IgrEc,
                    Suite::KpCount,
                    Suite::KpChi,
                    Suite::Gram,
                    Suite::Lefschetz510,
                    Suite::Closure,
                    Suite::Steps510,
                ]);
            }
            other => out.push(*other),
        }
    }
    let mut seen = Vec::new();
    out.retain(|s| {
        let fresh = !seen.contains(s);
        seen.push(*s);
        fresh
    });
    out
}

fn lemma_of(s: Suite) -> Option<Lemma> {
    Some(match s {
        Suite::Gr0 => Lemma::Gr0,
        Suite::Lgr0 => Lemma::Lgr0,
        Suite::IgrVan => Lemma::IgrVan,
        Suite::Igr0 => Lemma::Igr0,
        Suite::IgrEq => Lemma::IgrEq,
        Suite::IgrKap => Lemma::IgrKap,
        Suite::QNeg => Lemma::QNeg,
        _ => return None,
    })
}

fn merge_all(certs: impl IntoIterator<Item = Result<Certificate>>) -> Result<Option<Certificate>> {
    let mut acc: Option<Certificate> = None;
    for c in certs {
        let c = c?;
        acc = Some(match acc {
            Some(a) => a.merge(c),
            None => c,
        });
    }
    Ok(acc)
}

fn run_suite(suite: Suite, max_n: usize, bounds: LemmaBounds) -> Result<Option<Certificate>> {
    if let Some(lemma) = lemma_of(suite) {
        return merge_all((1..=max_n).map(|n| verify_lemma(lemma, n, bounds)));
    }
    match suite {
        Suite::PropMain => merge_all((1..=max_n).flat_map(|n| (1..=n).map(move |w| verify_prop_main(n, n + 1 - w, w)))),
        Suite::IgrEc => merge_all((2..=max_n).flat_map(|n| (1..n).map(move |w| verify_igr_ec(n, w)))),
        Suite::KpCount => merge_all((1..=max_n).map(|n| Ok(verify_kp_count(n)))),
        Suite::KpChi => merge_all((1..=max_n).map(verify_kp_chi)),
        Suite::Gram => merge_all((1..=max_n).map(verify_gram)),
        Suite::Lefschetz510 => verify_lefschetz_510().map(Some),
        Suite::Closure => merge_all((1..=max_n).map(generation_closure)),
        Suite::Steps510 => verify_510_steps().map(Some),
        _ => unreachable!("expanded"),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Output> {
    let bounds = LemmaBounds {
        max_entry: args.max_entry,
    };
    let mut table = String::new();
    let mut merged: Option<Certificate> = None;
    for suite in expand(&args.suite) {
        let Some(cert) = run_suite(suite, args.n, bounds)? else {
            continue;
        };
        writeln!(table, "{:<28} {:<26} {:>8} ms", cert.claim, cert.status.as_str(), cert.elapsed_ms).unwrap();
        merged = Some(match merged {
            Some(m) => m.merge(cert),
            None => cert,
        });
    }
    let cert = merged.ok_or_else(|| Error::InvalidParameter("no suite produced a certificate".into()))?;
    writeln!(table, "overall: {}", cert.status).unwrap();
    Ok(Output::certificate(cert, table))
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Output> {
    let mut table = String::new();
    let json = match args.what {
        Listing::Block => {
            let (h, w) = (args.h.expect("required"), args.w.expect("required"));
            let items = enumerate_block(h, w);
            for d in &items {
                writeln!(table, "{d}").unwrap();
            }
            json!({ "h": h, "w": w, "diagrams": items })
        }
        Listing::Kp => {
            let n = args.n.expect("required");
            let items = kp_collection(n);
            let labels: Vec<Value> = items
                .iter()
                .map(|(l, i)| {
                    writeln!(table, "E^({l})({i})").unwrap();
                    json!({ "lambda": l, "twist": i })
                })
                .collect();
            json!({ "n": n, "objects": labels })
        }
        Listing::Staircases => {
            let n = args.n.expect("required");
            let items: Vec<Value> = admissible_staircases(n)
                .into_iter()
                .map(|(l, h, w)| {
                    writeln!(table, "{l}  h={h} w={w}").unwrap();
                    json!({ "lambda": l, "h": h, "w": w })
                })
                .collect();
            json!({ "n": n, "staircases": items })
        }
    };
    Ok(Output::plain(json, table))
}
