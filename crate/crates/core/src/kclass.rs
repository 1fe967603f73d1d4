//! Grothendieck group of `LGr(n, 2n)` modelled on the free module spanned by
//! labels `[Σ^μ U*]`, `μ` any dominant `GL(n)` weight. Classes are compared
//! only through pairings.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bbw::ext_lgr;
use crate::diagrams::{enumerate_block, size_then_lex, Weight, YoungDiagram};
use crate::error::{Error, Result};
use crate::schur::dim_gl;

type PairKey = (Vec<i32>, Vec<i32>);

static CHI_MEMO: Lazy<DashMap<PairKey, (BigInt, i64)>> = Lazy::new(DashMap::new);
static E_MEMO: Lazy<DashMap<(YoungDiagram, usize), Arc<KClass>>> = Lazy::new(DashMap::new);

/// Formal integer combination of labels `[Σ^μ U*]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KClass {
    n: usize,
    terms: BTreeMap<Weight, i64>,
}

impl KClass {
    pub fn zero(n: usize) -> Self {
        KClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `[Σ^μ U*]`.
    pub fn basis(mu: Weight) -> Self {
        let mut out = KClass::zero(mu.len());
        out.add_term(mu, 1);
        out
    }

    /// `[O(t)] = [Σ^{(t,...,t)} U*]`.
    pub fn line(n: usize, t: i32) -> Self {
        KClass::basis(Weight::constant(n, t))
    }

    /// `[Σ^λ U*]` for a diagram padded to length `n`.
    pub fn schur(lambda: &YoungDiagram, n: usize) -> Result<Self> {
        Ok(KClass::basis(lambda.padded(n)?.into_weight()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, label: Weight, coeff: i64) {
        assert_eq!(label.len(), self.n, "label {label} has the wrong length");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(label).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &KClass, scale: i64) {
        assert_eq!(self.n, other.n);
        for (label, c) in &other.terms {
            self.add_term(label.clone(), c * scale);
        }
    }

    pub fn coeff(&self, label: &Weight) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Tensor with `O(t)`.
    pub fn twist(&self, t: i32) -> KClass {
        KClass {
            n: self.n,
            terms: self.terms.iter().map(|(w, &c)| (w.twist(t), c)).collect(),
        }
    }

    /// Dual class: every label negated.
    pub fn dual(&self) -> KClass {
        KClass {
            n: self.n,
            terms: self.terms.iter().map(|(w, &c)| (w.negate(), c)).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> KClass {
        let mut out = KClass::zero(self.n);
        out.add_scaled(self, k);
        out
    }

    /// `Σ coeff · dim Σ^μ`.
    pub fn rank(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(w, &c)| BigInt::from(c) * BigInt::from(dim_gl(w, self.n)))
            .sum()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "[{w}]")?;
        }
        Ok(())
    }
}

impl Serialize for KClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

/// Both pairings of two labels, memoized up to a common twist.
fn pairing_pair(a: &Weight, b: &Weight) -> (BigInt, i64) {
    let shift = -a.last().unwrap_or(0);
    let key = (a.twist(shift).parts().to_vec(), b.twist(shift).parts().to_vec());
    if let Some(hit) = CHI_MEMO.get(&key) {
        return hit.clone();
    }
    let graded = ext_lgr(a, b, a.len()).expect("labels share the rank");
    let value = (graded.euler_characteristic(), graded.invariant_euler_characteristic());
    CHI_MEMO.insert(key, value.clone());
    value
}

fn check_labels(a: &Weight, b: &Weight, n: usize) -> Result<()> {
    for w in [a, b] {
        if w.len() != n {
            return Err(Error::LengthMismatch {
                weight: w.to_string(),
                expected: n,
                found: w.len(),
            });
        }
    }
    Ok(())
}

/// `χ(Σ^μ U*(t), Σ^ν U*)`.
pub fn euler_pairing(mu: &Weight, nu: &Weight, t: i32, n: usize) -> Result<BigInt> {
    check_labels(mu, nu, n)?;
    Ok(pairing_pair(&mu.twist(t), nu).0)
}

/// `χ` of `Ext_G^•(Σ^μ U*, Σ^ν U*)`: alternating count of trivial summands.
pub fn euler_pairing_equivariant(mu: &Weight, nu: &Weight, n: usize) -> Result<i64> {
    check_labels(mu, nu, n)?;
    Ok(pairing_pair(mu, nu).1)
}

/// Bilinear extension `χ(A, B)`.
pub fn chi(a: &KClass, b: &KClass) -> BigInt {
    assert_eq!(a.n, b.n, "classes live on different Grassmannians");
    let mut total = BigInt::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            total += BigInt::from(cx * cy) * pairing_pair(x, y).0;
        }
    }
    total
}

/// Bilinear extension of the equivariant pairing.
pub fn chi_equivariant(a: &KClass, b: &KClass) -> i64 {
    assert_eq!(a.n, b.n, "classes live on different Grassmannians");
    a.terms()
        .flat_map(|(x, cx)| b.terms().map(move |(y, cy)| cx * cy * pairing_pair(x, y).1))
        .sum()
}

/// Equivariant pairing matrix of a block, rows and columns in size-then-lex
/// order: `entries[i][j] = χ_G(labels[i], labels[j])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub labels: Vec<YoungDiagram>,
    pub entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    /// First cell violating unitriangularity with respect to `⊆`, if any.
    pub fn unitriangular_violation(&self) -> Option<(usize, usize, i64)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let expected_zero = !self.labels[i].contains(&self.labels[j]);
                if (i == j && v != 1) || (i != j && expected_zero && v != 0) {
                    return Some((i, j, v));
                }
            }
        }
        None
    }
}

fn check_block(h: usize, w: usize, n: usize) -> Result<()> {
    if h + w > n + 1 {
        Err(Error::BlockTooLarge { h, w, n })
    } else {
        Ok(())
    }
}

pub fn gram_matrix(h: usize, w: usize, n: usize) -> Result<GramMatrix> {
    check_block(h, w, n)?;
    let labels = enumerate_block(h, w);
    let weights: Vec<Weight> = labels
        .iter()
        .map(|l| l.padded(n).map(YoungDiagram::into_weight))
        .collect::<Result<_>>()?;
    let entries = weights
        .par_iter()
        .map(|a| weights.iter().map(|b| pairing_pair(a, b).1).collect())
        .collect();
    Ok(GramMatrix { labels, entries })
}

fn subdiagrams(lambda: &YoungDiagram) -> Vec<YoungDiagram> {
    let parts = lambda.trimmed();
    let mut out: Vec<Vec<i32>> = vec![vec![]];
    for &bound in parts {
        out = out
            .into_iter()
            .flat_map(|p| {
                let cap = p.last().copied().unwrap_or(bound).min(bound);
                (0..=cap).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut diagrams: Vec<YoungDiagram> = out.into_iter().map(YoungDiagram::from_sorted).collect();
    diagrams.sort_by(size_then_lex);
    diagrams
}

/// `[E^λ]`: the class with `χ_G(E^λ, Σ^μ U*) = δ_{μλ}` for all `μ ⊆ λ`,
/// supported on `{[Σ^μ U*] : μ ⊆ λ}` with leading coefficient 1.
pub fn kclass_e(lambda: &YoungDiagram, h: usize, w: usize, n: usize) -> Result<KClass> {
    check_block(h, w, n)?;
    if !lambda.fits_in(h, w) {
        return Err(Error::BlockMismatch {
            diagram: lambda.to_string(),
            h,
            w,
        });
    }
    let key = (lambda.clone(), n);
    if let Some(hit) = E_MEMO.get(&key) {
        return Ok((**hit).clone());
    }
    let subs = subdiagrams(lambda);
    let weights: Vec<Weight> = subs
        .iter()
        .map(|s| s.padded(n).map(YoungDiagram::into_weight))
        .collect::<Result<_>>()?;
    let m = subs.len();
    for i in 0..m {
        for j in 0..m {
            let v = pairing_pair(&weights[i], &weights[j]).1;
            let bad = if i == j { v != 1 } else { !subs[i].contains(&subs[j]) && v != 0 };
            if bad {
                return Err(Error::NotUnitriangular {
                    row: subs[i].to_string(),
                    col: subs[j].to_string(),
                    value: v.to_string(),
                });
            }
        }
    }
    // Back-substitution from the top: a_μ = -Σ_{μ ⊊ ν ⊆ λ} a_ν χ_G(ν, μ).
    let mut coeffs = vec![0i64; m];
    coeffs[m - 1] = 1;
    for j in (0..m - 1).rev() {
        coeffs[j] = -(j + 1..m)
            .filter(|&i| coeffs[i] != 0)
            .map(|i| coeffs[i] * pairing_pair(&weights[i], &weights[j]).1)
            .sum::<i64>();
    }
    let mut out = KClass::zero(n);
    for (wt, c) in weights.into_iter().zip(coeffs) {
        out.add_term(wt, c);
    }
    E_MEMO.insert(key, Arc::new(out.clone()));
    Ok(out)
}

/// `[F^λ] = [E^λ]^*`.
pub fn kclass_f(lambda: &YoungDiagram, h: usize, w: usize, n: usize) -> Result<KClass> {
    Ok(kclass_e(lambda, h, w, n)?.dual())
}

pub fn twist_kclass(x: &KClass, t: i32) -> KClass {
    x.twist(t)
}

pub fn rank(x: &KClass) -> BigInt {
    x.rank()
}

/// Sign in Serre duality on `LGr(n, 2n)`: `(-1)^{dim}` with `dim = n(n+1)/2`.
pub fn serre_sign(n: usize) -> BigInt {
    if (n * (n + 1) / 2) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
