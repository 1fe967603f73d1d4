//! Borel-Bott-Weil evaluations.
//!
//! Each engine adds `ρ = (n, n-1, ..., 1)` to a weight, tests regularity,
//! straightens the sequence with the Weyl group and reports one irreducible
//! in degree `ℓ(w)`, or [`CohomCell::Zero`].
//!
//! * type A ([`dotted_sort_a`]): regular means pairwise distinct; `ℓ` is the
//!   inversion count.
//! * type C ([`dotted_sort_c`]): regular means the absolute values are
//!   positive and distinct; `ℓ` counts pairs `i < j` with `τ_i < τ_j`, pairs
//!   with `τ_i + τ_j < 0`, and negative entries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::diagrams::{Weight, YoungDiagram};
use crate::error::{Error, Result};
use crate::schur::{dim_sp_signed, tensor_gl, Group, VirtualModule};

/// Output of one Borel-Bott-Weil evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomCell {
    Zero,
    NonZero { degree: usize, weight: Weight },
}

impl CohomCell {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomCell::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomCell::Zero => None,
            CohomCell::NonZero { degree, .. } => Some(*degree),
        }
    }

    pub fn weight(&self) -> Option<&Weight> {
        match self {
            CohomCell::Zero => None,
            CohomCell::NonZero { weight, .. } => Some(weight),
        }
    }

    /// True for a nonzero cell whose output is the trivial representation.
    pub fn is_trivial(&self) -> bool {
        self.weight().is_some_and(|w| w.parts().iter().all(|&p| p == 0))
    }
}

/// `ρ = (n, n-1, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoContext {
    n: usize,
    rho: Vec<i32>,
}

impl RhoContext {
    pub fn new(n: usize) -> Self {
        RhoContext {
            n,
            rho: (1..=n as i32).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &[i32] {
        &self.rho
    }

    /// `ρ + seq`.
    pub fn shift(&self, seq: &[i32]) -> Vec<i32> {
        debug_assert_eq!(seq.len(), self.n);
        seq.iter().zip(&self.rho).map(|(a, r)| a + r).collect()
    }

    /// `seq - ρ` for an already sorted sequence.
    fn unshift(&self, sorted: &[i32]) -> Weight {
        Weight::from_sorted(sorted.iter().zip(&self.rho).map(|(a, r)| a - r).collect())
    }
}

/// Type A straightening of `seq = ρ + weight`.
pub fn dotted_sort_a(seq: &[i32]) -> CohomCell {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return CohomCell::Zero;
    }
    let degree = (0..seq.len())
        .map(|i| seq[i + 1..].iter().filter(|&&x| x > seq[i]).count())
        .sum();
    CohomCell::NonZero {
        degree,
        weight: RhoContext::new(seq.len()).unshift(&sorted),
    }
}

/// Type C straightening of `seq = ρ + weight`.
pub fn dotted_sort_c(seq: &[i32]) -> CohomCell {
    if seq.contains(&0) {
        return CohomCell::Zero;
    }
    let mut sorted: Vec<i32> = seq.iter().map(|x| x.abs()).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return CohomCell::Zero;
    }
    let mut degree = seq.iter().filter(|&&x| x < 0).count();
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] < seq[j] {
                degree += 1;
            }
            if seq[i] + seq[j] < 0 {
                degree += 1;
            }
        }
    }
    CohomCell::NonZero {
        degree,
        weight: RhoContext::new(seq.len()).unshift(&sorted),
    }
}

fn expect_len(weight: &Weight, expected: usize) -> Result<()> {
    if weight.len() == expected {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            weight: weight.to_string(),
            expected,
            found: weight.len(),
        })
    }
}

/// `R^• p_*(Σ^λ(V/U) ⊗ Σ^μ U)` on the relative Grassmannian `Gr(k, V)`,
/// `rank V = n`, with `λ` of length `n - k` and `μ` of length `k`. The output
/// weight is a `GL(n)` weight for `Σ^• V`.
pub fn coh_gr_relative(lambda: &Weight, mu: &Weight, n: usize) -> Result<CohomCell> {
    if lambda.len() + mu.len() != n {
        return Err(Error::InvalidParameter(format!(
            "relative Grassmannian weights {lambda} and {mu} do not add up to rank {n}"
        )));
    }
    Ok(dotted_sort_a(&RhoContext::new(n).shift(&lambda.concat(mu))))
}

/// `H^•(IGr(w, 2n), Σ^α W* ⊗ Sp⟨β⟩(W^⊥/W))` with `α` of length `w` and `β`
/// a diagram of length `n - w`. The output weight labels `Sp⟨•⟩ V`.
pub fn coh_igr(alpha: &Weight, beta: &YoungDiagram, w: usize, n: usize) -> Result<CohomCell> {
    if w == 0 || w > n {
        return Err(Error::InvalidParameter(format!("IGr({w}, {}) needs 0 < w <= n", 2 * n)));
    }
    expect_len(alpha, w)?;
    let beta = beta.padded(n - w)?;
    Ok(dotted_sort_c(&RhoContext::new(n).shift(&alpha.concat(beta.as_weight()))))
}

/// `H^•(LGr(n, 2n), Σ^λ U*)`.
pub fn coh_lgr(lambda: &Weight, n: usize) -> Result<CohomCell> {
    expect_len(lambda, n)?;
    Ok(dotted_sort_c(&RhoContext::new(n).shift(lambda.parts())))
}

/// Cohomology sorted by degree; every value is an `Sp(2n)` module. Degrees
/// with nothing in them are absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedModule {
    n: usize,
    degrees: BTreeMap<usize, VirtualModule>,
}

impl GradedModule {
    pub fn new(n: usize) -> Self {
        GradedModule {
            n,
            degrees: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_cell(&mut self, cell: &CohomCell, mult: i64) {
        if let CohomCell::NonZero { degree, weight } = cell {
            let module = self
                .degrees
                .entry(*degree)
                .or_insert_with(|| VirtualModule::new(Group::Sp(self.n)));
            module.add(weight.clone(), mult);
            if module.is_empty() {
                self.degrees.remove(degree);
            }
        }
    }

    pub fn degrees(&self) -> impl Iterator<Item = (usize, &VirtualModule)> {
        self.degrees.iter().map(|(&d, m)| (d, m))
    }

    pub fn get(&self, degree: usize) -> Option<&VirtualModule> {
        self.degrees.get(&degree)
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Number of irreducible summands, counted with multiplicity.
    pub fn cell_count(&self) -> i64 {
        self.degrees.values().flat_map(|m| m.iter().map(|(_, c)| c)).sum()
    }

    /// `Σ (-1)^d dim H^d`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.degrees
            .iter()
            .map(|(&d, m)| {
                let s: BigInt = m.iter().map(|(w, c)| BigInt::from(c) * dim_sp_signed(w, self.n)).sum();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .sum()
    }

    /// `Σ (-1)^d dim (H^d)^G`: alternating count of trivial summands.
    pub fn invariant_euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(&d, m)| {
                let s = m.trivial_multiplicity();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .sum()
    }
}

/// `H^•(LGr(n, 2n), Σ^a U ⊗ Σ^b U*) = Ext^•(Σ^a U*, Σ^b U*)` for arbitrary
/// dominant weights `a`, `b` of length `n`. `Σ^a U = Σ^{-a} U*`, so the
/// product is decomposed as `Σ^b U* ⊗ Σ^{-a} U*`.
pub fn ext_lgr(a: &Weight, b: &Weight, n: usize) -> Result<GradedModule> {
    expect_len(a, n)?;
    expect_len(b, n)?;
    let product = tensor_gl(b, &a.negate(), n)?;
    let mut out = GradedModule::new(n);
    for (nu, mult) in product.iter() {
        out.add_cell(&coh_lgr(nu, n)?, mult);
    }
    Ok(out)
}

/// `H^•(LGr(n, 2n), Σ^λ U ⊗ Σ^μ U* ⊗ O(t))`, `O(1) = det U*`.
pub fn coh_lgr_bundle(lambda: &YoungDiagram, mu: &YoungDiagram, t: i32, n: usize) -> Result<GradedModule> {
    let lambda = lambda.padded(n)?;
    let mu = mu.padded(n)?;
    ext_lgr(lambda.as_weight(), &mu.as_weight().twist(t), n)
}
