//! Enumeration suites for the vanishing lemmas, the main staircase
//! cohomology classification and the strong exceptional collection on
//! `IGr(w, 2n)`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bbw::{coh_gr_relative, coh_igr, coh_lgr, CohomCell, GradedModule};
use crate::diagrams::{enumerate_block, enumerate_weights, staircase_truncations, Weight, YoungDiagram};
use crate::error::{Error, Result};
use crate::schur::{tensor_gl, tensor_sp_stable, Group, VirtualModule};

use super::Certificate;

/// Lemma suites, named by the CLI selectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    Gr0,
    Lgr0,
    IgrVan,
    Igr0,
    IgrEq,
    IgrKap,
    QNeg,
}

impl Lemma {
    pub const ALL: [Lemma; 7] = [
        Lemma::Gr0,
        Lemma::Lgr0,
        Lemma::IgrVan,
        Lemma::Igr0,
        Lemma::IgrEq,
        Lemma::IgrKap,
        Lemma::QNeg,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Lemma::Gr0 => "gr0",
            Lemma::Lgr0 => "lgr0",
            Lemma::IgrVan => "igr_van",
            Lemma::Igr0 => "igr0",
            Lemma::IgrEq => "igr_eq",
            Lemma::IgrKap => "igr_kap",
            Lemma::QNeg => "q_neg",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaBounds {
    /// Largest absolute value of an enumerated entry, where the hypothesis
    /// leaves it unbounded.
    pub max_entry: i32,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        LemmaBounds { max_entry: 4 }
    }
}

fn nonzero(degree: usize, weight: Weight) -> CohomCell {
    CohomCell::NonZero { degree, weight }
}

fn diagrams(k: usize, max: i32) -> Vec<YoungDiagram> {
    enumerate_weights(k, 0, max)
        .into_iter()
        .map(|w| YoungDiagram::from_weight(w).expect("nonnegative"))
        .collect()
}

/// One mismatch between an engine and a predicted classification.
#[derive(Serialize)]
struct Mismatch {
    case: Value,
    expected: Value,
    found: Value,
}

/// Runs `check` over `cases` in parallel and folds the results into a
/// certificate; `check` returns a mismatch or `None`.
fn run_cases<T, F>(mut cert: Certificate, cases: Vec<T>, check: F) -> Certificate
where
    T: Send + Sync,
    F: Fn(&T) -> Result<Option<Mismatch>> + Send + Sync,
{
    let outcomes: Vec<Result<Option<Mismatch>>> = cases.par_iter().map(&check).collect();
    let mut failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(Some(m)) => failures.push(serde_json::to_value(m).expect("serializable")),
            Ok(None) => {}
            Err(e) => failures.push(json!({ "error": e.to_string() })),
        }
    }
    cert.witness(json!({ "cases": cases.len(), "mismatches": failures.len() }));
    failures.sort_by_cached_key(|v| v.to_string());
    for f in failures {
        cert.fail(f);
    }
    cert
}

fn compare(case: Value, expected: &CohomCell, found: &CohomCell) -> Option<Mismatch> {
    (expected != found).then(|| Mismatch {
        case,
        expected: json!(expected),
        found: json!(found),
    })
}

/// Enumerates the hypothesis space of one lemma and compares every engine
/// output against the stated classification.
pub fn verify_lemma(lemma: Lemma, n: usize, bounds: LemmaBounds) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let start = Instant::now();
    let max = bounds.max_entry;
    let cert = Certificate::new(format!("lemma-{lemma}"))
        .param("n", n)
        .param("max_entry", max);
    let cert = match lemma {
        Lemma::Gr0 => {
            let cases: Vec<(usize, Weight)> = (1..n)
                .flat_map(|k| enumerate_weights(n - k, -(k as i32), max).into_iter().map(move |l| (k, l)))
                .collect();
            run_cases(cert, cases, |(k, lambda)| {
                let found = coh_gr_relative(lambda, &Weight::zero(*k), n)?;
                let expected = if lambda.last().unwrap_or(0) >= 0 {
                    nonzero(0, Weight::new(lambda.concat(&Weight::zero(*k)))?)
                } else {
                    CohomCell::Zero
                };
                Ok(compare(json!({ "k": k, "lambda": lambda }), &expected, &found))
            })
        }
        Lemma::Lgr0 => {
            let cases = enumerate_weights(n, -1, max);
            run_cases(cert, cases, |lambda| {
                let found = coh_lgr(lambda, n)?;
                let expected = if lambda.last().unwrap_or(0) >= 0 {
                    nonzero(0, lambda.clone())
                } else {
                    CohomCell::Zero
                };
                Ok(compare(json!({ "lambda": lambda }), &expected, &found))
            })
        }
        Lemma::IgrVan => {
            let cases: Vec<(usize, Weight)> = (1..=n)
                .flat_map(|w| {
                    let lo = -((2 * n - 2 * w + 1) as i32);
                    enumerate_weights(w, lo, max).into_iter().map(move |nu| (w, nu))
                })
                .collect();
            run_cases(cert, cases, |(w, nu)| {
                let found = coh_igr(nu, &YoungDiagram::empty(0), *w, n)?;
                let expected = if nu.last().unwrap_or(0) >= 0 {
                    nonzero(0, Weight::new(nu.concat(&Weight::zero(n - w)))?)
                } else {
                    CohomCell::Zero
                };
                Ok(compare(json!({ "w": w, "nu": nu }), &expected, &found))
            })
        }
        Lemma::Igr0 => {
            let cases: Vec<(usize, YoungDiagram, YoungDiagram)> = (1..=n)
                .flat_map(|w| {
                    let betas = diagrams(w, max);
                    let alphas = diagrams(n - w, max);
                    betas
                        .into_iter()
                        .flat_map(move |b| alphas.clone().into_iter().map(move |a| (w, a, b.clone())))
                })
                .collect();
            run_cases(cert, cases, |(w, alpha, beta)| {
                let found = coh_igr(beta.as_weight(), alpha, *w, n)?;
                let both_zero = alpha.is_empty() && beta.is_empty();
                let ok = if both_zero {
                    found.degree() == Some(0) && found.is_trivial()
                } else {
                    !found.is_trivial()
                };
                Ok((!ok).then(|| Mismatch {
                    case: json!({ "w": w, "alpha": alpha, "beta": beta }),
                    expected: json!(if both_zero { "trivial in degree 0" } else { "no invariants" }),
                    found: json!(found),
                }))
            })
        }
        Lemma::IgrEq => {
            let mut cases = Vec::new();
            let mut unstable = 0usize;
            for w in 1..n {
                let m = n - w;
                let ds = diagrams(m, max);
                for a in &ds {
                    for b in &ds {
                        if a.size() + b.size() <= m {
                            cases.push((w, a.clone(), b.clone()));
                        } else {
                            unstable += 1;
                        }
                    }
                }
            }
            let cert = cert.param("unstable_pairs_unverified", unstable);
            run_cases(cert, cases, |(w, alpha, beta)| {
                let m = n - w;
                let product = tensor_sp_stable(alpha, beta, m)?;
                let mut invariants = GradedModule::new(n);
                for (nu, mult) in product.iter() {
                    let nu = YoungDiagram::from_weight(nu.clone())?;
                    let cell = coh_igr(&Weight::zero(*w), &nu, *w, n)?;
                    if cell.is_trivial() {
                        invariants.add_cell(&cell, mult);
                    }
                }
                let mut expected = GradedModule::new(n);
                if alpha == beta {
                    expected.add_cell(&nonzero(0, Weight::zero(n)), 1);
                }
                Ok((invariants != expected).then(|| Mismatch {
                    case: json!({ "w": w, "alpha": alpha, "beta": beta }),
                    expected: json!(expected),
                    found: json!(invariants),
                }))
            })
        }
        Lemma::IgrKap => {
            let cases: Vec<(usize, YoungDiagram, YoungDiagram)> = (1..n)
                .flat_map(|w| {
                    let lambdas: Vec<_> = enumerate_block(w, n - w).into_iter().filter(|l| l.width() as i32 <= max).collect();
                    let mus: Vec<_> = enumerate_block(n - w, w).into_iter().filter(|m| m.width() as i32 <= max).collect();
                    lambdas
                        .into_iter()
                        .flat_map(move |l| mus.clone().into_iter().map(move |m| (w, l.clone(), m)))
                })
                .collect();
            run_cases(cert, cases, |(w, lambda, mu)| {
                let alpha = lambda.padded(*w)?.as_weight().negate();
                let found = coh_igr(&alpha, mu, *w, n)?;
                let expected = if *lambda == mu.transpose() {
                    nonzero(lambda.size(), Weight::zero(n))
                } else {
                    CohomCell::Zero
                };
                Ok(compare(json!({ "w": w, "lambda": lambda, "mu": mu }), &expected, &found))
            })
        }
        Lemma::QNeg => {
            let cases: Vec<(usize, YoungDiagram)> = (1..=n)
                .filter(|&w| n - w >= 1)
                .flat_map(|w| {
                    let h = n + 1 - w;
                    enumerate_block(h - 1, h).into_iter().map(move |a| (h, a))
                })
                .collect();
            run_cases(cert, cases, |(h, alpha)| {
                let m = h - 1;
                let found = coh_lgr(&alpha.padded(m)?.as_weight().negate(), m)?;
                let ok = found.is_zero() || found.is_trivial();
                Ok((!ok).then(|| Mismatch {
                    case: json!({ "h": h, "alpha": alpha }),
                    expected: json!("zero or a trivial cell"),
                    found: json!(found),
                }))
            })
        }
    };
    Ok(cert.timed(start))
}

/// Classification of `H^•(IGr(w, 2n), Σ^{μ(-1)} W ⊗ Sp⟨λ̄⟩(W^⊥/W))` for
/// `λ ∈ Y_{h,w}` with `λ_1 = w` and `μ ∈ Y_{w,h}`.
pub fn verify_prop_main(n: usize, h: usize, w: usize) -> Result<Certificate> {
    if h + w != n + 1 || w == 0 || h == 0 {
        return Err(Error::InvalidParameter(format!("need h + w = n + 1 with h, w > 0; got h={h}, w={w}, n={n}")));
    }
    let start = Instant::now();
    let lambdas: Vec<YoungDiagram> = enumerate_block(h, w).into_iter().filter(|l| l.width() == w).collect();
    let mus = enumerate_block(w, h);
    let cases: Vec<(YoungDiagram, YoungDiagram)> = lambdas
        .iter()
        .flat_map(|l| mus.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let cert = Certificate::new("prop-main").param("n", n).param("h", h).param("w", w);
    let cert = run_cases(cert, cases, |(lambda, mu)| {
        let data = staircase_truncations(lambda, h, w)?;
        let alpha = mu.padded(w)?.as_weight().twist(-1).negate();
        let bar = YoungDiagram::new((1..h).map(|i| lambda.part(i)).collect())?;
        let found = if w == n {
            coh_lgr(&alpha, n)?
        } else {
            coh_igr(&alpha, &bar, w, n)?
        };
        let mu_t = mu.transpose();
        let expected = match (0..=w).find(|&i| *data.truncation(i) == mu_t) {
            Some(i) => {
                let degree = data.truncation(i).size() - (w - i);
                nonzero(degree, YoungDiagram::column(data.nu(i)).padded(n)?.into_weight())
            }
            None => CohomCell::Zero,
        };
        Ok(compare(json!({ "lambda": lambda, "mu": mu }), &expected, &found))
    });
    Ok(cert.timed(start))
}

/// `Ext^•(Σ^μ W*, Σ^λ W*)` on `IGr(w, 2n)` for `μ, λ ∈ Y_{w,h}`,
/// `h = n + 1 - w`, as graded `Sp(2n)` modules.
pub fn igr_hom(mu: &YoungDiagram, lambda: &YoungDiagram, w: usize, n: usize) -> Result<GradedModule> {
    let product = tensor_gl(lambda.padded(w)?.as_weight(), &mu.padded(w)?.as_weight().negate(), w)?;
    let mut out = GradedModule::new(n);
    let empty = YoungDiagram::empty(0);
    for (nu, mult) in product.iter() {
        out.add_cell(&coh_igr(nu, &empty, w, n)?, mult);
    }
    Ok(out)
}

/// The bundles `Σ^μ W*`, `μ ∈ Y_{w,h}`, form a strong exceptional
/// collection ordered by inclusion.
pub fn verify_igr_ec(n: usize, w: usize) -> Result<Certificate> {
    if w == 0 || w >= n {
        return Err(Error::InvalidParameter(format!("need 0 < w < n; got w={w}, n={n}")));
    }
    let start = Instant::now();
    let h = n + 1 - w;
    let block = enumerate_block(w, h);
    let cases: Vec<(YoungDiagram, YoungDiagram)> = block
        .iter()
        .flat_map(|m| block.iter().map(move |l| (m.clone(), l.clone())))
        .collect();
    let cert = Certificate::new("igr-strong-exceptional").param("n", n).param("w", w);
    let cert = run_cases(cert, cases, |(mu, lambda)| {
        let hom = igr_hom(mu, lambda, w, n)?;
        let only_degree_zero = hom.degrees().all(|(d, _)| d == 0);
        let ok = only_degree_zero
            && if mu == lambda {
                hom.get(0) == Some(&VirtualModule::trivial(Group::Sp(n))) && hom.degrees().count() == 1
            } else if !lambda.contains(mu) {
                hom.is_zero()
            } else {
                true
            };
        Ok((!ok).then(|| Mismatch {
            case: json!({ "mu": mu, "lambda": lambda }),
            expected: json!("degree 0 only; trivial of rank 1 on the diagonal; zero unless μ ⊆ λ"),
            found: json!(hom),
        }))
    });
    Ok(cert.timed(start))
}
