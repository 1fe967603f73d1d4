//! Littlewood-Richardson calculus and Weyl dimensions.
//!
//! The kernel enumerates Littlewood-Richardson skew tableaux directly: the
//! `r`-th row of the content is added to the current shape as a horizontal
//! strip of boxes labelled `r`, subject to the lattice condition on the
//! reverse reading word. Full products are memoized in a process-wide table.
//!
//! Mixed weights (negative parts) are reduced to Young diagrams with the twist
//! `Σ^{λ(t)} = Σ^λ ⊗ det^t`, so a single kernel serves every `GL(k)`
//! computation.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use once_cell::sync::Lazy;
use serde::{Serialize, Serializer};

use crate::diagrams::{Weight, YoungDiagram};
use crate::error::{Error, Result};

/// The group whose irreducibles label a [`VirtualModule`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `GL(k)`, keys are dominant weights of length `k`.
    Gl(usize),
    /// `Sp(2n)`, keys are Young diagrams with at most `n` rows, stored with length `n`.
    Sp(usize),
}

impl Group {
    pub fn rank(&self) -> usize {
        match *self {
            Group::Gl(k) | Group::Sp(k) => k,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Group::Gl(k) => write!(f, "GL({k})"),
            Group::Sp(n) => write!(f, "Sp({})", 2 * n),
        }
    }
}

impl Serialize for Group {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Integer combination of irreducible representations of a fixed group.
/// Zero multiplicities are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VirtualModule {
    group: Group,
    terms: BTreeMap<Weight, i64>,
}

impl VirtualModule {
    pub fn new(group: Group) -> Self {
        VirtualModule {
            group,
            terms: BTreeMap::new(),
        }
    }

    /// The trivial representation with multiplicity one.
    pub fn trivial(group: Group) -> Self {
        let mut m = VirtualModule::new(group);
        m.add(Weight::zero(group.rank()), 1);
        m
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn add(&mut self, weight: Weight, mult: i64) {
        debug_assert_eq!(weight.len(), self.group.rank(), "{weight} in {}", self.group);
        if mult == 0 {
            return;
        }
        match self.terms.entry(weight) {
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += mult;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_module(&mut self, other: &VirtualModule) {
        debug_assert_eq!(self.group, other.group);
        for (w, &m) in &other.terms {
            self.add(w.clone(), m);
        }
    }

    pub fn get(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplicity of the trivial representation.
    pub fn trivial_multiplicity(&self) -> i64 {
        self.get(&Weight::zero(self.group.rank()))
    }

    /// `Σ mult · dim`, using the Weyl dimension formula of the tagged group.
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(w, &m)| {
                let d = match self.group {
                    Group::Gl(k) => dim_gl(w, k),
                    Group::Sp(n) => {
                        let diagram = YoungDiagram::from_weight(w.clone()).expect("Sp keys are diagrams");
                        dim_sp(&diagram, n).expect("Sp keys have at most n rows")
                    }
                };
                BigInt::from(m) * BigInt::from(d)
            })
            .sum()
    }
}

type Shape = Vec<i32>;
type ProductKey = (Shape, Shape, usize);
type Product = Arc<Vec<(Shape, u64)>>;

/// Memo of full LR products keyed by trimmed shapes and row bound. Concurrent
/// writers may race on a key; every writer stores the same value.
static PRODUCT_MEMO: Lazy<DashMap<ProductKey, Product>> = Lazy::new(DashMap::new);

fn trim(parts: &[i32]) -> Shape {
    let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
    parts[..end].to_vec()
}

/// Enumerates LR tableaux of shape `ν/outer` with the given content and
/// records each reachable `ν` with its tableau count. `bound`, when given,
/// restricts every intermediate shape to lie inside it.
fn lr_fill(outer: &[i32], content: &[i32], max_rows: usize, bound: Option<&[i32]>) -> BTreeMap<Shape, u64> {
    struct Ctx<'a> {
        content: &'a [i32],
        max_rows: usize,
        bound: Option<&'a [i32]>,
        out: BTreeMap<Shape, u64>,
    }

    // Places label `r` (0-based) row by row. `prev` holds the per-row count of
    // label r-1, `cur` accumulates the per-row count of label r.
    #[allow(clippy::too_many_arguments)]
    fn place_row(
        ctx: &mut Ctx<'_>,
        r: usize,
        row: usize,
        remaining: i32,
        old: &[i32],
        shape: &mut Vec<i32>,
        prev: &[i32],
        cur: &mut Vec<i32>,
        placed: i32,
        prev_above: i32,
    ) {
        if remaining == 0 {
            let next_prev: Vec<i32> = cur.clone();
            next_label(ctx, r + 1, shape, &next_prev);
            return;
        }
        if row >= ctx.max_rows {
            return;
        }
        let old_here = old.get(row).copied().unwrap_or(0);
        if row > 0 && old.get(row - 1).copied().unwrap_or(0) == 0 {
            // Row above is empty in the old shape: nothing further down can grow.
            return;
        }
        let mut cap = if row == 0 {
            remaining
        } else {
            old[row - 1] - old_here
        };
        if let Some(b) = ctx.bound {
            cap = cap.min(b.get(row).copied().unwrap_or(0) - old_here);
        }
        if r > 0 {
            // #r in rows <= row must not exceed #(r-1) in rows < row.
            cap = cap.min(prev_above - placed);
        }
        cap = cap.min(remaining);
        let prev_here = prev.get(row).copied().unwrap_or(0);
        for x in (0..=cap.max(-1)).rev() {
            if shape.len() <= row {
                shape.push(0);
            }
            shape[row] = old_here + x;
            if cur.len() <= row {
                cur.push(0);
            }
            cur[row] = x;
            place_row(
                ctx,
                r,
                row + 1,
                remaining - x,
                old,
                shape,
                prev,
                cur,
                placed + x,
                prev_above + prev_here,
            );
            cur[row] = 0;
            shape[row] = old_here;
        }
    }

    fn next_label(ctx: &mut Ctx<'_>, r: usize, shape: &[i32], prev: &[i32]) {
        if r == ctx.content.len() {
            let key = trim(shape);
            *ctx.out.entry(key).or_insert(0) += 1;
            return;
        }
        let old = trim(shape);
        let mut work = old.clone();
        let mut cur = Vec::new();
        place_row(ctx, r, 0, ctx.content[r], &old, &mut work, prev, &mut cur, 0, 0);
    }

    let mut ctx = Ctx {
        content,
        max_rows,
        bound,
        out: BTreeMap::new(),
    };
    next_label(&mut ctx, 0, outer, &[]);
    ctx.out
}

/// Full product `s_a · s_b` restricted to shapes with at most `max_rows`
/// rows, as a sorted list of `(trimmed shape, multiplicity)`.
pub(crate) fn lr_product(a: &[i32], b: &[i32], max_rows: usize) -> Product {
    let (mut a, mut b) = (trim(a), trim(b));
    // The content side drives the enumeration; keep it the smaller diagram.
    let size = |s: &[i32]| s.iter().map(|&p| p as i64).sum::<i64>();
    if (size(&b), &b) > (size(&a), &a) {
        std::mem::swap(&mut a, &mut b);
    }
    let key = (a, b, max_rows);
    if let Some(hit) = PRODUCT_MEMO.get(&key) {
        return Arc::clone(hit.value());
    }
    let (a, b, _) = &key;
    let result: Product = if a.len() > max_rows || b.len() > max_rows {
        Arc::new(Vec::new())
    } else {
        Arc::new(lr_fill(a, b, max_rows, None).into_iter().collect())
    };
    PRODUCT_MEMO.insert(key, Arc::clone(&result));
    result
}

/// `c^ν_{λ,μ}`: the multiplicity of `Σ^ν` in `Σ^λ ⊗ Σ^μ`.
pub fn lr_coeff(lambda: &YoungDiagram, mu: &YoungDiagram, nu: &YoungDiagram) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let target = nu.trimmed();
    lr_fill(lambda.trimmed(), mu.trimmed(), target.len(), Some(target))
        .get(target)
        .copied()
        .unwrap_or(0)
}

fn padded_weight(w: &Weight, k: usize) -> Result<Weight> {
    if w.len() == k {
        return Ok(w.clone());
    }
    if w.len() < k && w.is_diagram() {
        let mut parts = w.parts().to_vec();
        parts.resize(k, 0);
        return Ok(Weight::from_sorted(parts));
    }
    Err(Error::LengthMismatch {
        weight: w.to_string(),
        expected: k,
        found: w.len(),
    })
}

/// Decomposes `Σ^λ ⊗ Σ^μ` of a rank-`k` space. Diagrams shorter than `k` are
/// zero-padded; other weights must have length exactly `k`.
pub fn tensor_gl(lambda: &Weight, mu: &Weight, k: usize) -> Result<VirtualModule> {
    let lambda = padded_weight(lambda, k)?;
    let mu = padded_weight(mu, k)?;
    let mut out = VirtualModule::new(Group::Gl(k));
    if k == 0 {
        out.add(Weight::zero(0), 1);
        return Ok(out);
    }
    let (sl, sm) = (lambda.last().unwrap(), mu.last().unwrap());
    let a = lambda.twist(-sl);
    let b = mu.twist(-sm);
    for (shape, mult) in lr_product(a.parts(), b.parts(), k).iter() {
        let mut parts = shape.clone();
        parts.resize(k, 0);
        let nu = Weight::from_sorted(parts).twist(sl + sm);
        out.add(nu, *mult as i64);
    }
    Ok(out)
}

/// Expansion of the skew Schur functor `Σ^{λ/μ} = ⊕ (Σ^ν)^{c^λ_{ν,μ}}` on a
/// rank-`k` space.
pub fn skew(lambda: &YoungDiagram, mu: &YoungDiagram, k: usize) -> Result<VirtualModule> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let mut out = VirtualModule::new(Group::Gl(k));
    let target = lambda.trimmed();
    let content_size = lambda.size() - mu.size();
    // Each ν appears as content of an LR tableau of shape λ/μ; enumerate the
    // candidates ν ⊆ λ of the right size.
    for nu in diagrams_inside(target, content_size) {
        if nu.len() > k {
            continue;
        }
        let c = lr_fill(mu.trimmed(), &nu, target.len(), Some(target))
            .get(target)
            .copied()
            .unwrap_or(0);
        if c > 0 {
            let mut parts = nu;
            parts.resize(k, 0);
            out.add(Weight::from_sorted(parts), c as i64);
        }
    }
    Ok(out)
}

/// All trimmed diagrams `ν ⊆ outer` with `|ν| = size`.
fn diagrams_inside(outer: &[i32], size: usize) -> Vec<Shape> {
    fn rec(outer: &[i32], row: usize, max: i32, left: i32, prefix: &mut Vec<i32>, out: &mut Vec<Shape>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if row >= outer.len() {
            return;
        }
        let hi = max.min(outer[row]).min(left);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(outer, row + 1, p, left - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 0, i32::MAX, size as i32, &mut Vec::new(), &mut out);
    out
}

/// Weyl dimension of the `GL(k)` irreducible with highest weight `λ`:
/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn dim_gl(lambda: &Weight, k: usize) -> BigUint {
    let lambda = padded_weight(lambda, k).expect("weight length must match rank");
    let p = lambda.parts();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        for j in i + 1..k {
            num *= (p[i] - p[j] + (j - i) as i32) as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// Weyl dimension of the `Sp(2n)` irreducible `Sp⟨λ⟩`. With `l = λ + ρ` and
/// `ρ = (n, ..., 1)` it is
/// `∏_{i<j} (l_i - l_j)(l_i + l_j) / ((ρ_i - ρ_j)(ρ_i + ρ_j)) · ∏_i l_i / ρ_i`.
pub fn dim_sp(lambda: &YoungDiagram, n: usize) -> Result<BigUint> {
    if lambda.height() > n {
        return Err(Error::TooManyRows {
            diagram: lambda.to_string(),
            n,
        });
    }
    let rho: Vec<i64> = (1..=n as i64).rev().collect();
    let l: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64 + rho[i]).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= l[i] as u64;
        den *= rho[i] as u64;
        for j in i + 1..n {
            num *= ((l[i] - l[j]) * (l[i] + l[j])) as u64;
            den *= ((rho[i] - rho[j]) * (rho[i] + rho[j])) as u64;
        }
    }
    Ok(num / den)
}

/// The `i`-th fundamental representation `V^{[i]} = Sp⟨(1^i)⟩` of `Sp(2n)`.
pub fn fundamental_sp(i: usize, n: usize) -> Result<YoungDiagram> {
    if i == 0 || i > n {
        return Err(Error::FundamentalIndex { i, n });
    }
    Ok(YoungDiagram::column(i))
}

/// `dim V^{[i]}` for `0 <= i <= n`, with `V^{[0]}` the trivial module.
pub fn fundamental_dim(i: usize, n: usize) -> Result<BigUint> {
    if i == 0 {
        return Ok(BigUint::one());
    }
    dim_sp(&fundamental_sp(i, n)?, n)
}

/// `Sp(2n)` tensor product in the stable range `|λ| + |μ| <= n`, computed with
/// the Newell-Littlewood formula
/// `N^ν_{λμ} = Σ_{α,β,γ} c^λ_{αβ} c^μ_{αγ} c^ν_{βγ}`.
pub fn tensor_sp_stable(lambda: &YoungDiagram, mu: &YoungDiagram, n: usize) -> Result<VirtualModule> {
    if lambda.size() + mu.size() > n {
        return Err(Error::UnstableRange {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
            n,
        });
    }
    let mut out = VirtualModule::new(Group::Sp(n));
    let rank = lambda.size() + mu.size();
    let common: Vec<i32> = (0..lambda.height().min(mu.height()))
        .map(|i| lambda.part(i).min(mu.part(i)))
        .collect();
    for alpha_size in 0..=common.iter().sum::<i32>() as usize {
        for alpha in diagrams_inside(&common, alpha_size) {
            let alpha = YoungDiagram::from_sorted(alpha);
            let left = skew(lambda, &alpha, rank.max(1))?;
            let right = skew(mu, &alpha, rank.max(1))?;
            for (beta, cb) in left.iter() {
                for (gamma, cg) in right.iter() {
                    for (nu, cn) in lr_product(beta.parts(), gamma.parts(), n).iter() {
                        let mut parts = nu.clone();
                        parts.resize(n, 0);
                        out.add(Weight::from_sorted(parts), cb * cg * *cn as i64);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `dim Sp⟨λ⟩` as a signed integer, for alternating sums.
pub(crate) fn dim_sp_signed(lambda: &Weight, n: usize) -> BigInt {
    let diagram = YoungDiagram::from_weight(lambda.clone()).expect("Sp weight is a diagram");
    BigInt::from(dim_sp(&diagram, n).expect("Sp weight has at most n rows"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn d(parts: &[i32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn w(parts: &[i32]) -> Weight {
        Weight::new(parts.to_vec()).unwrap()
    }

    /// Brute-force LR oracle: count all fillings of the skew shape ν/λ with
    /// content μ that are semistandard and whose reverse reading word is a
    /// lattice word, by trying every assignment of labels to cells.
    fn lr_brute(lambda: &[i32], mu: &[i32], nu: &[i32]) -> u64 {
        let cells: Vec<(usize, usize)> = nu
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| {
                let start = lambda.get(r).copied().unwrap_or(0);
                (start..len).map(move |c| (r, c as usize))
            })
            .collect();
        let labels = mu.len();
        if cells.len() != mu.iter().sum::<i32>() as usize {
            return 0;
        }
        let mut fill = vec![0usize; cells.len()];
        let mut count = 0;
        let total = labels.pow(cells.len() as u32);
        for code in 0..total {
            let mut c = code;
            for f in fill.iter_mut() {
                *f = c % labels;
                c /= labels;
            }
            let mut content = vec![0; labels];
            for &f in &fill {
                content[f] += 1;
            }
            if content.iter().zip(mu).any(|(&a, &b)| a != b) {
                continue;
            }
            let at = |r: usize, col: usize| cells.iter().position(|&x| x == (r, col)).map(|i| fill[i]);
            let ssyt = cells.iter().enumerate().all(|(i, &(r, col))| {
                let right_ok = at(r, col + 1).map_or(true, |v| v >= fill[i]);
                let below_ok = at(r + 1, col).map_or(true, |v| v > fill[i]);
                right_ok && below_ok
            });
            if !ssyt {
                continue;
            }
            let mut seen = vec![0; labels];
            let mut lattice = true;
            for (r, &len) in nu.iter().enumerate() {
                let start = lambda.get(r).copied().unwrap_or(0) as usize;
                for col in (start..len as usize).rev() {
                    let v = at(r, col).unwrap();
                    seen[v] += 1;
                    if v > 0 && seen[v] > seen[v - 1] {
                        lattice = false;
                    }
                }
            }
            if lattice {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_brute(&[1], &[2], &[2, 1]), 1);
        assert_eq!(lr_coeff(&d(&[1]), &d(&[2]), &d(&[2, 1])), 1);
        assert_eq!(lr_coeff(&d(&[1]), &d(&[1]), &d(&[1, 1, 1])), 0);
        assert_eq!(lr_brute(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coeff(&d(&[2, 1]), &d(&[2, 1]), &d(&[3, 2, 1])), 2);
    }

    #[test]
    fn lr_matches_brute_force_on_small_shapes() {
        let shapes: Vec<Vec<i32>> = vec![
            vec![],
            vec![1],
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![3],
            vec![1, 1, 1],
            vec![2, 2],
            vec![3, 1],
        ];
        for a in &shapes {
            for b in &shapes {
                let total = a.iter().chain(b).sum::<i32>() as usize;
                for nu in diagrams_inside(&[4, 4, 4, 4], total) {
                    let expect = lr_brute(a, b, &nu);
                    let got = lr_coeff(
                        &YoungDiagram::new(a.clone()).unwrap_or(YoungDiagram::empty(0)),
                        &YoungDiagram::new(b.clone()).unwrap_or(YoungDiagram::empty(0)),
                        &YoungDiagram::new(nu.clone()).unwrap_or(YoungDiagram::empty(0)),
                    );
                    assert_eq!(got, expect, "c^{nu:?}_({a:?},{b:?})");
                }
            }
        }
    }

    #[test]
    fn product_agrees_with_coefficient() {
        let (a, b) = (d(&[3, 1]), d(&[2, 2, 1]));
        let prod: HashMap<_, _> = lr_product(a.parts(), b.parts(), 6).iter().cloned().collect();
        for nu in diagrams_inside(&[6, 6, 6, 6, 6, 6], a.size() + b.size()) {
            let c = lr_coeff(&a, &b, &YoungDiagram::new(nu.clone()).unwrap());
            assert_eq!(prod.get(&nu).copied().unwrap_or(0), c, "{nu:?}");
        }
    }

    #[test]
    fn tensor_gl_mixed_weights() {
        let n = 4;
        let m = tensor_gl(&w(&[1, 0, 0, 0]), &w(&[0, 0, 0, -1]), n).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.get(&w(&[1, 0, 0, -1])), 1);
        assert_eq!(m.get(&w(&[0, 0, 0, 0])), 1);

        let lambda = w(&[2, 1, -1]);
        let m = tensor_gl(&lambda, &Weight::zero(3), 3).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(&lambda, 1)]);
    }

    #[test]
    fn tensor_gl_drops_long_shapes() {
        let m = tensor_gl(&w(&[1, 1]), &w(&[1, 1]), 2).unwrap();
        // (2,2) only: (2,1,1) and (1,1,1,1) need more rows.
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(&w(&[2, 2]), 1)]);
    }

    #[test]
    fn skew_examples() {
        let m = skew(&d(&[2, 1]), &d(&[1]), 2).unwrap();
        assert_eq!(m.get(&w(&[2, 0])), 1);
        assert_eq!(m.get(&w(&[1, 1])), 1);
        assert_eq!(m.len(), 2);

        let lambda = d(&[3, 2]);
        let m = skew(&lambda, &lambda, 3).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(&Weight::zero(3), 1)]);

        let m = skew(&lambda, &YoungDiagram::empty(0), 3).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(&w(&[3, 2, 0]), 1)]);

        assert!(matches!(skew(&d(&[2]), &d(&[1, 1]), 2), Err(Error::NotContained { .. })));
    }

    /// Counts semistandard tableaux of shape λ with entries in 1..=k.
    fn ssyt_count(lambda: &[i32], k: usize) -> u64 {
        fn rec(lambda: &[i32], k: usize, filled: &mut Vec<Vec<usize>>, r: usize, c: usize) -> u64 {
            if r == lambda.len() {
                return 1;
            }
            if c == lambda[r] as usize {
                filled.push(Vec::new());
                let res = rec(lambda, k, filled, r + 1, 0);
                filled.pop();
                return res;
            }
            let lo_left = if c > 0 { filled[r][c - 1] } else { 1 };
            let lo_up = if r > 0 { filled[r - 1][c] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_left.max(lo_up)..=k {
                filled[r].push(v);
                total += rec(lambda, k, filled, r, c + 1);
                filled[r].pop();
            }
            total
        }
        let mut filled = vec![Vec::new()];
        rec(lambda, k, &mut filled, 0, 0)
    }

    #[test]
    fn dim_gl_examples() {
        assert_eq!(dim_gl(&w(&[1, 0, 0, 0, 0]), 5), BigUint::from(5u32));
        assert_eq!(dim_gl(&w(&[1, 1, 0, 0]), 4), BigUint::from(6u32));
        assert_eq!(ssyt_count(&[2, 1], 3), 8);
        assert_eq!(dim_gl(&w(&[2, 1, 0]), 3), BigUint::from(8u32));
        assert_eq!(dim_gl(&w(&[0, 0, -1]), 3), BigUint::from(3u32));
        for lambda in [vec![3, 1], vec![2, 2, 1], vec![4], vec![1, 1, 1]] {
            for k in lambda.len()..=5 {
                let mut parts = lambda.clone();
                parts.resize(k, 0);
                assert_eq!(dim_gl(&w(&parts), k), BigUint::from(ssyt_count(&lambda, k)));
            }
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn dim_sp_examples() {
        assert_eq!(dim_sp(&d(&[1]), 5).unwrap(), BigUint::from(10u32));
        assert_eq!(dim_sp(&d(&[1, 1]), 5).unwrap(), BigUint::from(44u32));
        assert_eq!(dim_sp(&d(&[1, 1, 1]), 5).unwrap(), BigUint::from(110u32));
        // Sp(4): adjoint 10, 5-dimensional, 16 and 14.
        assert_eq!(dim_sp(&d(&[2]), 2).unwrap(), BigUint::from(10u32));
        assert_eq!(dim_sp(&d(&[1, 1]), 2).unwrap(), BigUint::from(5u32));
        assert_eq!(dim_sp(&d(&[2, 1]), 2).unwrap(), BigUint::from(16u32));
        assert_eq!(dim_sp(&d(&[2, 2]), 2).unwrap(), BigUint::from(14u32));
        assert!(matches!(dim_sp(&d(&[1, 1, 1]), 2), Err(Error::TooManyRows { .. })));
        assert_eq!(dim_sp(&d(&[5, 5, 5, 5, 5]), 5).unwrap(), BigUint::from(6_852_768u32));
        let big = dim_sp(&d(&[40, 30, 20, 10, 5]), 5).unwrap();
        assert!(big > BigUint::from(u64::MAX));
    }

    #[test]
    fn fundamental_dimensions() {
        for n in 1..=8u64 {
            for i in 1..=n {
                let lambda = fundamental_sp(i as usize, n as usize).unwrap();
                assert_eq!(lambda.height(), i as usize);
                let expected = binom(2 * n, i) - if i >= 2 { binom(2 * n, i - 2) } else { 0 };
                assert_eq!(dim_sp(&lambda, n as usize).unwrap(), BigUint::from(expected));
            }
        }
        assert_eq!(fundamental_dim(5, 5).unwrap(), BigUint::from(132u32));
        assert_eq!(fundamental_dim(2, 5).unwrap(), BigUint::from(44u32));
        assert!(fundamental_sp(0, 3).is_err());
        assert!(fundamental_sp(4, 3).is_err());
    }

    #[test]
    fn symplectic_products() {
        for n in 2..=5 {
            let m = tensor_sp_stable(&d(&[1]), &d(&[1]), n).unwrap();
            assert_eq!(m.len(), 3);
            for nu in [w(&[2]), w(&[1, 1]), Weight::zero(0)] {
                let mut parts = nu.parts().to_vec();
                parts.resize(n, 0);
                assert_eq!(m.get(&w(&parts)), 1);
            }
            assert_eq!(m.dimension(), BigInt::from(4 * n * n));
        }
        let m = tensor_sp_stable(&d(&[1]), &d(&[1, 1]), 3).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.get(&w(&[2, 1, 0])), 1);
        assert_eq!(m.get(&w(&[1, 1, 1])), 1);
        assert_eq!(m.get(&w(&[1, 0, 0])), 1);

        let lambda = d(&[2, 1]);
        let m = tensor_sp_stable(&lambda, &YoungDiagram::empty(0), 4).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(&w(&[2, 1, 0, 0]), 1)]);

        assert!(matches!(
            tensor_sp_stable(&d(&[2]), &d(&[2]), 3),
            Err(Error::UnstableRange { .. })
        ));
    }

    #[test]
    fn trivial_module_helpers() {
        let m = VirtualModule::trivial(Group::Sp(3));
        assert_eq!(m.trivial_multiplicity(), 1);
        assert_eq!(m.dimension(), BigInt::from(1));
        let mut z = VirtualModule::new(Group::Gl(2));
        z.add(w(&[1, 0]), 2);
        z.add(w(&[1, 0]), -2);
        assert!(z.is_empty());
    }
    fn partition(max_rows: usize, max_part: i32, max_size: usize) -> impl Strategy<Value = YoungDiagram> {
        proptest::collection::vec(0..=max_part, 0..=max_rows)
            .prop_map(|mut v| {
                v.retain(|&p| p > 0);
                v.sort_unstable_by(|a, b| b.cmp(a));
                YoungDiagram::new(v).unwrap()
            })
            .prop_filter("size bound", move |d| d.size() <= max_size)
    }

    fn subdiagrams(lambda: &YoungDiagram) -> Vec<YoungDiagram> {
        crate::diagrams::enumerate_block(lambda.height(), lambda.width())
            .into_iter()
            .filter(|m| lambda.contains(m))
            .map(|m| YoungDiagram::new(m.trimmed().to_vec()).unwrap())
            .collect()
    }

    proptest! {
        #[test]
        fn lr_is_symmetric(lambda in partition(4, 4, 8), mu in partition(4, 4, 8)) {
            let k = lambda.height() + mu.height();
            let product = tensor_gl(lambda.as_weight(), mu.as_weight(), k.max(1)).unwrap();
            for (nu, mult) in product.iter() {
                let nu = YoungDiagram::from_weight(nu.clone()).unwrap();
                prop_assert_eq!(lr_coeff(&lambda, &mu, &nu), lr_coeff(&mu, &lambda, &nu));
                prop_assert_eq!(lr_coeff(&lambda, &mu, &nu) as i64, mult);
            }
        }

        #[test]
        fn gl_dimensions_multiply(lambda in partition(3, 3, 6), mu in partition(3, 3, 6), k in 2usize..=6) {
            prop_assume!(lambda.height() <= k && mu.height() <= k);
            let product = tensor_gl(lambda.as_weight(), mu.as_weight(), k).unwrap();
            let lhs = BigInt::from(dim_gl(lambda.as_weight(), k) * dim_gl(mu.as_weight(), k));
            prop_assert_eq!(product.dimension(), lhs);
        }

        #[test]
        fn skew_filtration_dimension(lambda in partition(3, 3, 6), a in 1usize..=4, b in 1usize..=4) {
            prop_assume!(lambda.height() <= a + b);
            let mut total = BigUint::from(0u8);
            for mu in subdiagrams(&lambda) {
                if mu.height() > a {
                    continue;
                }
                let mut inner = BigUint::from(0u8);
                for nu in subdiagrams(&lambda) {
                    if nu.height() <= b && nu.size() + mu.size() == lambda.size() {
                        inner += dim_gl(nu.as_weight(), b) * lr_coeff(&nu, &mu, &lambda);
                    }
                }
                total += dim_gl(mu.as_weight(), a) * inner;
            }
            prop_assert_eq!(dim_gl(lambda.as_weight(), a + b), total);
        }

        #[test]
        fn effective_summand_forces_containment(lambda in partition(3, 3, 9), mu in partition(3, 3, 9)) {
            let k = 3;
            let product = tensor_gl(lambda.as_weight(), &mu.padded(k).unwrap().as_weight().negate(), k).unwrap();
            if product.iter().any(|(nu, _)| nu.parts().iter().all(|&p| p >= 0)) {
                prop_assert!(lambda.contains(&mu));
            }
        }

        #[test]
        fn stable_symplectic_dimensions(lambda in partition(2, 3, 4), mu in partition(2, 3, 4), n in 2usize..=6) {
            prop_assume!(lambda.size() + mu.size() <= n);
            let product = tensor_sp_stable(&lambda, &mu, n).unwrap();
            let lhs = BigInt::from(dim_sp(&lambda, n).unwrap() * dim_sp(&mu, n).unwrap());
            prop_assert_eq!(product.dimension(), lhs);
        }
    }
}
