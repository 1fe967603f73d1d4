//! Lagrangian staircase complexes, their twists and splices, and the
//! K-theoretic exactness probe.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::diagrams::{enumerate_block, lambda_prime, staircase_truncations, Weight, YoungDiagram};
use crate::error::{Error, Result};
use crate::kclass::{chi, kclass_e, KClass};
use crate::schur::fundamental_dim;
use crate::verify::Certificate;

/// `E^λ(t)`; the diagram is stored trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ObjectLabel {
    pub lambda: YoungDiagram,
    pub twist: i32,
}

impl ObjectLabel {
    pub fn new(lambda: &YoungDiagram, twist: i32) -> Self {
        ObjectLabel {
            lambda: YoungDiagram::from_sorted(lambda.trimmed().to_vec()),
            twist,
        }
    }

    pub fn twisted(&self, t: i32) -> Self {
        ObjectLabel {
            lambda: self.lambda.clone(),
            twist: self.twist + t,
        }
    }
}

impl fmt::Display for ObjectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E^({})({})", self.lambda, self.twist)
    }
}

/// One term `V ⊗ E^λ(t)` of a complex, `V` of dimension `multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StairTerm {
    pub position: i32,
    pub multiplicity: u64,
    /// Fundamental index of `V = V^{[ν]}`; 0 for the trivial module.
    pub nu: usize,
    pub object: ObjectLabel,
    pub kclass: KClass,
}

impl StairTerm {
    pub fn description(&self) -> String {
        if self.nu == 0 {
            self.object.to_string()
        } else {
            format!("V^[{}] ⊗ {}", self.nu, self.object)
        }
    }
}

/// Bounded complex with strictly increasing homological positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StairComplex {
    n: usize,
    terms: Vec<StairTerm>,
}

impl StairComplex {
    pub fn from_terms(n: usize, terms: Vec<StairTerm>) -> Result<Self> {
        if terms.windows(2).any(|p| p[0].position >= p[1].position) {
            return Err(Error::InvalidParameter("positions must increase strictly".into()));
        }
        if let Some(t) = terms.iter().find(|t| t.multiplicity == 0 || t.kclass.n() != n) {
            return Err(Error::InvalidParameter(format!("invalid term {}", t.description())));
        }
        Ok(StairComplex { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[StairTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ObjectLabel> {
        self.terms.iter().map(|t| &t.object)
    }

    /// Tensor every term with `O(t)`.
    pub fn twisted(&self, t: i32) -> StairComplex {
        StairComplex {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|term| StairTerm {
                    object: term.object.twisted(t),
                    kclass: term.kclass.twist(t),
                    ..term.clone()
                })
                .collect(),
        }
    }

    /// Same terms, every position moved by `by`.
    pub fn shifted(&self, by: i32) -> StairComplex {
        StairComplex {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|term| StairTerm {
                    position: term.position + by,
                    ..term.clone()
                })
                .collect(),
        }
    }
}

impl fmt::Display for StairComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0")?;
        for t in &self.terms {
            write!(f, " → [{}] {}", t.position, t.description())?;
        }
        write!(f, " → 0")
    }
}

fn stair_term(position: i32, nu: usize, lambda: &YoungDiagram, h: usize, w: usize, twist: i32, n: usize) -> Result<StairTerm> {
    let multiplicity = fundamental_dim(nu, n)?
        .to_u64()
        .expect("fundamental dimension fits in u64");
    Ok(StairTerm {
        position,
        multiplicity,
        nu,
        object: ObjectLabel::new(lambda, twist),
        kclass: kclass_e(lambda, h, w, n)?.twist(twist),
    })
}

/// `0 → E^{λ'}(-1) → V^{[ν_w]} ⊗ E^{λ^(w)} → ... → V^{[ν_1]} ⊗ E^{λ^(1)} → E^λ → 0`
/// at positions `-(w+1), ..., 0`.
pub fn build_staircase(lambda: &YoungDiagram, h: usize, w: usize, n: usize) -> Result<StairComplex> {
    if h + w != n + 1 {
        return Err(Error::BlockTooLarge { h, w, n });
    }
    let data = staircase_truncations(lambda, h, w)?;
    let (lp, hp, wp) = lambda_prime(lambda, h, w)?;
    let mut terms = Vec::with_capacity(w + 2);
    terms.push(stair_term(-(w as i32) - 1, 0, &lp, hp, wp, -1, n)?);
    for i in (1..=w).rev() {
        terms.push(stair_term(-(i as i32), data.nu(i), data.truncation(i), h, w, 0, n)?);
    }
    terms.push(stair_term(0, 0, lambda, h, w, 0, n)?);
    StairComplex::from_terms(n, terms)
}

/// Object labels of `build_staircase(λ, h, w, n)` twisted by `twist`, left to
/// right, without computing any class.
pub fn staircase_labels(lambda: &YoungDiagram, h: usize, w: usize, twist: i32) -> Result<Vec<ObjectLabel>> {
    let data = staircase_truncations(lambda, h, w)?;
    let (lp, _, _) = lambda_prime(lambda, h, w)?;
    let mut out = vec![ObjectLabel::new(&lp, twist - 1)];
    out.extend((1..=w).rev().map(|i| ObjectLabel::new(data.truncation(i), twist)));
    out.push(ObjectLabel::new(lambda, twist));
    Ok(out)
}

/// `Σ (-1)^position · multiplicity · class`.
pub fn euler_class(c: &StairComplex) -> KClass {
    let mut out = KClass::zero(c.n);
    for t in &c.terms {
        let sign = if t.position.rem_euclid(2) == 0 { 1 } else { -1 };
        out.add_scaled(&t.kclass, sign * t.multiplicity as i64);
    }
    out
}

/// Labels `κ ∈ Y_{n,n}` padded to length `n`.
pub fn default_probes(n: usize) -> Vec<Weight> {
    enumerate_block(n, n)
        .into_iter()
        .map(|k| k.padded(n).expect("fits").into_weight())
        .collect()
}

/// `χ(Σ^κ U*, [c])` for each probe `κ`; the nonzero ones are returned.
pub fn probe_failures(c: &StairComplex, probes: &[Weight]) -> Vec<(Weight, BigInt)> {
    let class = euler_class(c);
    let mut bad: Vec<(Weight, BigInt)> = probes
        .par_iter()
        .filter_map(|k| {
            let v = chi(&KClass::basis(k.clone()), &class);
            (!v.is_zero()).then(|| (k.clone(), v))
        })
        .collect();
    bad.sort();
    bad
}

/// Necessary condition for exactness: the Euler class pairs to zero with
/// every probe.
pub fn verify_exactness_probe(c: &StairComplex, probes: &[Weight]) -> Certificate {
    let start = Instant::now();
    let mut cert = Certificate::new("staircase-exactness")
        .param("n", c.n)
        .param("complex", c.to_string())
        .param("probes", probes.len());
    for (k, v) in probe_failures(c, probes) {
        cert.fail(json!({ "probe": k.to_string(), "chi": v.to_string() }));
    }
    cert.necessary_only().timed(start)
}

/// Yoneda splice along the last term of `c1` and the first term of `c2`.
/// `c2` keeps its positions; `c1` is shifted so that its penultimate term
/// sits where the shared term was; the shared term is dropped.
pub fn splice(c1: &StairComplex, c2: &StairComplex) -> Result<StairComplex> {
    let (Some(last), Some(first)) = (c1.terms.last(), c2.terms.first()) else {
        return Err(Error::InvalidParameter("cannot splice an empty complex".into()));
    };
    if c1.n != c2.n
        || c1.terms.len() < 2
        || last.object != first.object
        || last.kclass != first.kclass
        || last.multiplicity != first.multiplicity
    {
        return Err(Error::SpliceMismatch {
            left: last.description(),
            right: first.description(),
        });
    }
    let penultimate = c1.terms[c1.terms.len() - 2].position;
    let offset = first.position - penultimate;
    let mut terms: Vec<StairTerm> = c1.terms[..c1.terms.len() - 1]
        .iter()
        .map(|t| StairTerm {
            position: t.position + offset,
            ..t.clone()
        })
        .collect();
    terms.extend(c2.terms[1..].iter().cloned());
    StairComplex::from_terms(c1.n, terms)
}

/// Every admissible `(λ, h, w)` with `h + w = n + 1` and `λ_1 = w`.
pub fn admissible_staircases(n: usize) -> Vec<(YoungDiagram, usize, usize)> {
    (1..=n)
        .flat_map(|w| {
            let h = n + 1 - w;
            enumerate_block(h, w)
                .into_iter()
                .filter(move |l| l.part(0) == w as i32)
                .map(move |l| (l, h, w))
        })
        .collect()
}
