//! Counting beer proper interval graphs.
//!
//! A Dyck path, read as balanced parentheses, is a forest; its weight is the
//! product of `k + 1` over the blocks of its level-order blocking, where a
//! block is a node followed by the maximal run of leaves sharing its parent.
//! For a connected proper interval graph the blocks of its distance tree (with
//! the root treated as a sibling of its first child) are its twin classes, so
//! the weight counts beer vertex patterns up to isomorphism. `C̄(n)` sums the
//! weights of all Dyck paths with `n` up-steps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interval::IntervalGraph;
use crate::proper::ProperIntervalGraph;

pub const MAX_ENUMERATION_N: usize = 16;
pub const MAX_WEIGHTED_ENUMERATION_N: usize = 14;
pub const MAX_IDENTITY_N: usize = 20;
pub const MAX_SXY_N: usize = 10;
pub const MAX_H_K: usize = 30;

fn limit(what: &'static str, max: usize, got: usize) -> Result<()> {
    if got > max {
        return Err(Error::LimitExceeded { what, max, got });
    }
    Ok(())
}

/// Up-steps are `true`. Written with `0` for up and `1` for down, which is
/// also the endpoint string of the corresponding proper interval graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn from_steps(steps: Vec<bool>) -> Result<Self> {
        let mut h = 0i64;
        for (i, &up) in steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::DyckViolation(i + 1));
            }
        }
        if h != 0 {
            return Err(Error::DyckViolation(steps.len()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// Number of up-steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Touches zero only at its ends.
    pub fn is_irreducible(&self) -> bool {
        let mut h = 0i64;
        let len = self.steps.len();
        len > 0
            && self.steps.iter().enumerate().all(|(i, &up)| {
                h += if up { 1 } else { -1 };
                h > 0 || i + 1 == len
            })
    }

    /// The irreducible factors, one per connected component of the graph.
    pub fn components(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let (mut h, mut start) = (0i64, 0);
        for (i, &up) in self.steps.iter().enumerate() {
            h += if up { 1 } else { -1 };
            if h == 0 {
                out.push(DyckPath { steps: self.steps[start..=i].to_vec() });
                start = i + 1;
            }
        }
        out
    }

    pub fn graph(&self) -> ProperIntervalGraph {
        ProperIntervalGraph::new(IntervalGraph::parse(&self.to_string()).unwrap()).unwrap()
    }

    /// Parents of the forest in level order; node `i + 1` has parent
    /// `parents[i]`, with 0 for roots.
    pub fn forest_parents(&self) -> Vec<usize> {
        let mut children: Vec<Vec<usize>> = vec![Vec::new()];
        let mut stack = vec![0];
        for &up in &self.steps {
            if up {
                let id = children.len();
                children.push(Vec::new());
                children[*stack.last().unwrap()].push(id);
                stack.push(id);
            } else {
                stack.pop();
            }
        }
        let mut rank = vec![0usize; children.len()];
        let mut parents = Vec::with_capacity(children.len() - 1);
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &c in &children[x] {
                rank[c] = parents.len() + 1;
                parents.push(rank[x]);
                queue.push_back(c);
            }
        }
        parents
    }

    pub fn blocks(&self) -> TwinClasses {
        TwinClasses { blocks: level_blocks(&self.forest_parents()) }
    }

    pub fn weight(&self) -> BigUint {
        self.blocks().weight()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &up in &self.steps {
            f.write_str(if up { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts `0`/`1` or `(`/`)`.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                '0' | '(' => Ok(true),
                '1' | ')' => Ok(false),
                other => Err(Error::InvalidEndpoints(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps)
    }
}

/// All Dyck paths with `n` up-steps in lexicographic order (up before down).
#[derive(Debug, Clone)]
pub struct DyckWords {
    n: usize,
    cur: Option<Vec<bool>>,
}

impl DyckWords {
    pub fn new(n: usize) -> Self {
        let first = std::iter::repeat_n(true, n).chain(std::iter::repeat_n(false, n)).collect();
        DyckWords { n, cur: Some(first) }
    }

    fn advance(n: usize, w: &mut [bool]) -> bool {
        let (mut ups, mut downs) = (w.iter().filter(|&&b| b).count(), w.iter().filter(|&&b| !b).count());
        for i in (0..2 * n).rev() {
            if w[i] {
                ups -= 1;
                if ups > downs {
                    w[i] = false;
                    let rest = n - ups;
                    for (j, s) in w[i + 1..].iter_mut().enumerate() {
                        *s = j < rest;
                    }
                    return true;
                }
            } else {
                downs -= 1;
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.cur.take()?;
        let mut next = cur.clone();
        if Self::advance(self.n, &mut next) {
            self.cur = Some(next);
        }
        Some(DyckPath { steps: cur })
    }
}

/// Every Dyck path with `n` up-steps with its proper interval graph; with
/// `irreducible_only`, only the connected ones.
pub fn enum_dyck_graphs(n: usize, irreducible_only: bool) -> Result<impl Iterator<Item = (DyckPath, ProperIntervalGraph)>> {
    limit("Dyck enumeration size", MAX_ENUMERATION_N, n)?;
    let inner: Box<dyn Iterator<Item = DyckPath>> = if irreducible_only {
        if n == 0 {
            Box::new(std::iter::empty())
        } else {
            Box::new(DyckWords::new(n - 1).map(move |p| {
                let mut steps = Vec::with_capacity(2 * n);
                steps.push(true);
                steps.extend_from_slice(&p.steps);
                steps.push(false);
                DyckPath { steps }
            }))
        }
    } else {
        Box::new(DyckWords::new(n))
    };
    Ok(inner.map(|p| {
        let g = p.graph();
        (p, g)
    }))
}

/// Level-order blocks: each block is a node followed by the maximal run of
/// leaves with the same parent.
fn level_blocks(parents: &[usize]) -> Vec<Vec<usize>> {
    let n = parents.len();
    let mut has_child = vec![false; n + 1];
    for &p in parents {
        has_child[p] = true;
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for v in 1..=n {
        match blocks.last_mut() {
            Some(b) if parents[v - 1] == parents[b[0] - 1] && !has_child[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    blocks
}

/// Twin classes as consecutive vertex blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClasses {
    blocks: Vec<Vec<usize>>,
}

impl TwinClasses {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Product of `k + 1` over block sizes `k`.
    pub fn weight(&self) -> BigUint {
        self.blocks.iter().map(|b| BigUint::from(b.len() + 1)).product()
    }
}

/// Twin classes of a connected proper interval graph from its distance tree,
/// and the resulting weight.
pub fn twin_blocks_and_weight(g: &ProperIntervalGraph) -> Result<(TwinClasses, BigUint)> {
    let t = g.tree()?;
    // the root becomes the first child of a dummy root, next to its own children
    let parents: Vec<usize> = t.parents().into_iter().map(|p| if p == 1 { 0 } else { p }).collect();
    let classes = TwinClasses { blocks: level_blocks(&parents) };
    let w = classes.weight();
    Ok((classes, w))
}

/// Twin classes of the graph of `p`, which may be disconnected: twins never
/// straddle components, so each component is blocked on its own.
pub fn graph_twin_classes(p: &DyckPath) -> TwinClasses {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for c in p.components() {
        let (classes, _) = twin_blocks_and_weight(&c.graph()).expect("irreducible paths give connected graphs");
        blocks.extend(classes.blocks.into_iter().map(|b| b.into_iter().map(|v| v + offset).collect()));
        offset += c.semilength();
    }
    TwinClasses { blocks }
}

pub fn catalan(n: usize) -> BigUint {
    binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1)
}

/// `C̄(n)` by summing weights over every Dyck path with `n` up-steps.
pub fn cbar_by_enumeration(n: usize) -> Result<BigUint> {
    limit("weighted enumeration size", MAX_WEIGHTED_ENUMERATION_N, n)?;
    Ok(DyckWords::new(n).map(|p| p.weight()).sum())
}

/// Weighted sequences up to index `max`, by two independent methods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    /// `C̄` from the split into left and right factors.
    pub cbar: Vec<BigUint>,
    pub lbar: Vec<BigUint>,
    pub rbar: Vec<BigUint>,
    /// `C̄` as coefficients of the root of `(2x - x²) f² - f + 1 = 0`.
    pub cbar_gf: Vec<BigUint>,
}

impl Series {
    pub fn len(&self) -> usize {
        self.cbar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cbar.is_empty()
    }

    /// `C̄(n + 1) / C̄(n)`.
    pub fn growth(&self, n: usize) -> f64 {
        ratio(&self.cbar[n + 1], &self.cbar[n])
    }
}

pub fn weighted_series(max: usize) -> Series {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    let mut l: Vec<BigInt> = vec![BigInt::zero()];
    let mut r: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=max {
        let ln: BigInt = (0..n).map(|j| &c[n - j - 1] * BigInt::from(j + 2)).sum();
        l.push(ln);
        let cn: BigInt = (1..=n).map(|k| &l[k] * &r[n - k]).sum();
        let rn = &cn - (1..=n).map(|j| BigInt::from(j + 1) * &r[n - j]).sum::<BigInt>();
        c.push(cn);
        r.push(rn);
    }

    // f_n = 2 s_{n-1} - s_{n-2} where s_m = sum_i f_i f_{m-i}
    let mut f: Vec<BigInt> = vec![BigInt::one()];
    let mut s: Vec<BigInt> = Vec::new();
    for n in 1..=max {
        let m = n - 1;
        s.push((0..=m).map(|i| &f[i] * &f[m - i]).sum());
        let mut fn_ = BigInt::from(2) * &s[m];
        if m >= 1 {
            fn_ -= &s[m - 1];
        }
        f.push(fn_);
    }

    let to_u = |v: Vec<BigInt>| v.into_iter().map(|x| x.to_biguint().expect("weighted counts are non-negative")).collect();
    Series { cbar: to_u(c), lbar: to_u(l), rbar: to_u(r), cbar_gf: to_u(f) }
}

/// `a / b` from a 128-bit-scaled integer quotient.
pub fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let q: BigUint = (a << 128u32) / b;
    q.to_f64().unwrap() / 2f64.powi(128)
}

pub fn growth_constant() -> f64 {
    4.0 + 2.0 * 3f64.sqrt()
}

/// Gap sets of the left- and right-endpoint block compositions of a proper
/// interval graph on `n` vertices: `i` is in `R_l` when vertices `i` and
/// `i + 1` have their left endpoints in the same block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionRepr {
    n: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl CompositionRepr {
    pub fn new(n: usize, left: &[usize], right: &[usize]) -> Result<Self> {
        let norm = |set: &[usize]| -> Result<Vec<usize>> {
            let mut v = set.to_vec();
            v.sort_unstable();
            v.dedup();
            if let Some(&x) = v.iter().find(|&&x| x == 0 || x >= n) {
                return Err(Error::InvalidEndpoints(format!("gap {x} outside 1..{n}")));
            }
            Ok(v)
        };
        let (left, right) = (norm(left)?, norm(right)?);
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            if a < b {
                return Err(Error::DyckViolation(i));
            }
            a += usize::from(left.binary_search(&i).is_ok());
            b += usize::from(right.binary_search(&i).is_ok());
        }
        if left.len() != right.len() {
            return Err(Error::InvalidEndpoints(format!("{} left gaps but {} right gaps", left.len(), right.len())));
        }
        Ok(CompositionRepr { n, left, right })
    }

    /// From an endpoint string; `flip` swaps the roles of `0` and `1`.
    pub fn from_endpoints(s: &str, flip: bool) -> Result<Self> {
        let g = ProperIntervalGraph::parse(s, flip)?;
        let s = g.endpoint_string();
        let n = g.len();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let (mut opened, mut closed) = (0, 0);
        let mut prev = b' ';
        for c in s.bytes() {
            if c == b'0' {
                opened += 1;
                if prev == b'0' {
                    left.push(opened - 1);
                }
            } else {
                closed += 1;
                if prev == b'1' {
                    right.push(closed - 1);
                }
            }
            prev = c;
        }
        Self::new(n, &left, &right)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn shared(&self) -> Vec<usize> {
        self.left.iter().copied().filter(|x| self.right.binary_search(x).is_ok()).collect()
    }

    fn parts(&self, gaps: &[usize]) -> Vec<usize> {
        let mut parts = vec![1];
        for i in 1..self.n {
            if gaps.binary_search(&i).is_ok() {
                *parts.last_mut().unwrap() += 1;
            } else {
                parts.push(1);
            }
        }
        parts
    }

    pub fn to_endpoints(&self) -> String {
        let mut s = String::with_capacity(2 * self.n);
        for (a, b) in self.parts(&self.left).into_iter().zip(self.parts(&self.right)) {
            s.extend(std::iter::repeat_n('0', a));
            s.extend(std::iter::repeat_n('1', b));
        }
        s
    }

    /// Maximal cliques in order: the open intervals at the end of each run
    /// of left endpoints.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let (mut first, mut last) = (1, 0);
        let mut out = Vec::new();
        for (a, b) in self.parts(&self.left).into_iter().zip(self.parts(&self.right)) {
            last += a;
            out.push((first..=last).collect());
            first += b;
        }
        out
    }

    /// Twin classes: runs of vertices with no barrier in `R_l ∩ R_r`.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut v = 1;
        self.parts(&self.shared())
            .into_iter()
            .map(|k| {
                let class = (v..v + k).collect();
                v += k;
                class
            })
            .collect()
    }
}

/// Right side of `C(n+1) = Σ_x Σ_y binom(n, x) binom(n-x, 2y) C(y)`.
pub fn catalan_identity_sum(n: usize) -> BigUint {
    let mut total = BigUint::zero();
    for x in 0..=n {
        for y in 0..=(n - x) / 2 {
            total += binomial(BigUint::from(n), BigUint::from(x)) * binomial(BigUint::from(n - x), BigUint::from(2 * y)) * catalan(y);
        }
    }
    total
}

/// `|S_{x,y}| = binom(n, x) binom(n-x, 2y) C(y)` over gap positions `1..=n`.
pub fn sxy_formula(n: usize, x: usize, y: usize) -> BigUint {
    if x + 2 * y > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(x)) * binomial(BigUint::from(n - x), BigUint::from(2 * y)) * catalan(y)
}

/// Visits every pair of gap sets over positions `1..=n` with equal sizes and
/// the Dyck property, as bit masks with bit `i - 1` for position `i`.
fn for_each_gap_pair(n: usize, mut f: impl FnMut(u32, u32)) {
    for l in 0u32..(1 << n) {
        for r in 0u32..(1 << n) {
            if l.count_ones() != r.count_ones() {
                continue;
            }
            let (mut a, mut b) = (0, 0);
            let ok = (0..n).all(|i| {
                a += l >> i & 1;
                b += r >> i & 1;
                a >= b
            });
            if ok {
                f(l, r);
            }
        }
    }
}

/// Explicit counts of valid gap-set pairs keyed by `(x, y)`.
pub fn sxy_enumerated(n: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    limit("gap-set enumeration size", MAX_SXY_N, n)?;
    let mut counts = BTreeMap::new();
    for_each_gap_pair(n, |l, r| {
        let x = (l & r).count_ones() as usize;
        let y = (r & !l).count_ones() as usize;
        *counts.entry((x, y)).or_insert(0) += 1;
    });
    Ok(counts)
}

/// Product of `k + 1` over the parts of the composition of `n + 1` cut at the
/// positions missing from `gaps`.
fn gap_weight(n: usize, gaps: u32) -> BigUint {
    let mut w = BigUint::one();
    let mut part = 1usize;
    for i in 0..n {
        if gaps >> i & 1 == 1 {
            part += 1;
        } else {
            w *= BigUint::from(part + 1);
            part = 1;
        }
    }
    w * BigUint::from(part + 1)
}

/// `f(n, x)`: average weight over valid gap-set pairs with `|R_l ∩ R_r| = x`,
/// as an exact fraction `(numerator, denominator)`.
pub fn f_average(n: usize, x: usize) -> Result<(BigUint, BigUint)> {
    limit("gap-set enumeration size", MAX_SXY_N, n)?;
    let (mut num, mut den) = (BigUint::zero(), BigUint::zero());
    for_each_gap_pair(n, |l, r| {
        if (l & r).count_ones() as usize == x {
            num += gap_weight(n, l & r);
            den += 1u32;
        }
    });
    Ok((num, den))
}

/// Total weight over all valid gap-set pairs on `n` positions, by explicit
/// enumeration.
pub fn census_by_enumeration(n: usize) -> Result<BigUint> {
    limit("gap-set enumeration size", MAX_SXY_N, n)?;
    let mut total = BigUint::zero();
    for_each_gap_pair(n, |l, r| total += gap_weight(n, l & r));
    Ok(total)
}

/// Total weight over all valid gap-set pairs on `n` positions: the `2y`
/// unshared gaps cut the `n + 1` vertices into `2y + 1` segments, each
/// contributing `h` of its length.
pub fn census(n: usize) -> BigUint {
    let h = h_by_recurrence(n + 1);
    let m = n + 1;
    // pow[j][t] = coefficient of t in H(t)^j, H(t) = Σ_{k>=1} h(k) t^k
    let mut total = BigUint::zero();
    let mut power: Vec<BigUint> = vec![BigUint::zero(); m + 1];
    power[0] = BigUint::one();
    let mul = |p: &[BigUint]| -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); m + 1];
        for (i, a) in p.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for k in 1..=m - i {
                out[i + k] += a * &h[k];
            }
        }
        out
    };
    power = mul(&power);
    let mut y = 0;
    while 2 * y < m {
        total += catalan(y) * &power[m];
        power = mul(&mul(&power));
        y += 1;
    }
    total
}

/// `h(k)` by listing every composition of `k`.
pub fn h_by_enumeration(k: usize) -> Result<u128> {
    limit("composition enumeration size", MAX_H_K, k)?;
    fn go(rest: usize, acc: u128) -> u128 {
        if rest == 0 {
            return acc;
        }
        (1..=rest).map(|p| go(rest - p, acc * (p as u128 + 1))).sum()
    }
    Ok(go(k, 1))
}

/// `h(0..=k)` by `h(k) = 4 h(k-1) - 2 h(k-2)`, which holds from `k = 3` on.
pub fn h_by_recurrence(k: usize) -> Vec<BigUint> {
    let mut h: Vec<BigInt> = vec![BigInt::one(), BigInt::from(2), BigInt::from(7)];
    while h.len() <= k {
        let i = h.len();
        h.push(BigInt::from(4) * &h[i - 1] - BigInt::from(2) * &h[i - 2]);
    }
    h.truncate(k + 1);
    h.into_iter().map(|x| x.to_biguint().unwrap()).collect()
}

/// `h(k)` by summing over the last part: `h(k) = Σ_{i=1}^{k} (i + 1) h(k - i)`.
pub fn h_by_last_part(k: usize) -> Vec<BigUint> {
    let mut h = vec![BigUint::one()];
    for m in 1..=k {
        let v = (1..=m).map(|i| BigUint::from(i + 1) * &h[m - i]).sum();
        h.push(v);
    }
    h
}

/// `((2+√2)^{k+1} - (2-√2)^{k+1}) / (4√2)` evaluated exactly in `Z[√2]`.
/// For `k >= 1`; at `k = 0` it is one half.
pub fn h_closed_form(k: usize) -> BigUint {
    // (2+√2)^m = a + b√2, and the expression equals b / 2
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    for _ in 0..=k {
        let na = BigUint::from(2u32) * &a + BigUint::from(2u32) * &b;
        let nb = &a + BigUint::from(2u32) * &b;
        a = na;
        b = nb;
    }
    b / BigUint::from(2u32)
}

pub fn h_growth_constant() -> f64 {
    2.0 + 2f64.sqrt()
}

/// One row of the census trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRow {
    pub n: usize,
    pub census: BigUint,
    /// `census(n) / census(n - 1)`, absent for the first row.
    pub ratio: Option<f64>,
    /// `census(n)^(1/n)`.
    pub root: f64,
}

pub fn trajectories(max_n: usize) -> Vec<TrajectoryRow> {
    let values: Vec<BigUint> = (0..=max_n).map(census).collect();
    (1..=max_n)
        .map(|n| {
            let ln = values[n].to_f64().unwrap().ln();
            TrajectoryRow { n, census: values[n].clone(), ratio: Some(ratio(&values[n], &values[n - 1])), root: (ln / n as f64).exp() }
        })
        .collect()
}

/// Reference constants for the census bounds: `7`, `6 + √2` and `15/2`.
pub fn bound_constants() -> [(&'static str, f64); 3] {
    [("7", 7.0), ("6+sqrt2", 6.0 + 2f64.sqrt()), ("15/2", 7.5)]
}

/// Outcome of the counting identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct AppendixReport {
    /// `(n, C(n+1), identity sum)`.
    pub catalan_identity: Vec<(usize, BigUint, BigUint)>,
    /// `(n, x, y, enumerated, formula)`.
    pub sxy: Vec<(usize, usize, usize, u64, BigUint)>,
    /// `(k, enumerated, recurrence, closed form)`.
    pub h: Vec<(usize, u128, BigUint, BigUint)>,
    /// `(n, x, f(n,x), lower bound 2^n (1/2)^x, upper bound 2^n (3/4)^x)`.
    pub f: Vec<(usize, usize, f64, f64, f64)>,
    pub trajectories: Vec<TrajectoryRow>,
}

impl AppendixReport {
    pub fn all_exact_checks_pass(&self) -> bool {
        self.catalan_identity.iter().all(|(_, a, b)| a == b)
            && self.sxy.iter().all(|(_, _, _, e, f)| BigUint::from(*e) == *f)
            && self.h.iter().all(|(_, e, r, c)| BigUint::from(*e) == *r && r == c)
    }
}

/// Runs the counting identity checks: Catalan identity for `n <= n_max`, `S_{x,y}`
/// counts for `n <= min(n_max, 10)`, `h(k)` three ways for `1 <= k <= k_max`,
/// `f(n, x)` against its bounds and census trajectories.
pub fn appendix_identities(n_max: usize, k_max: usize) -> Result<AppendixReport> {
    limit("identity size", MAX_IDENTITY_N, n_max)?;
    limit("composition enumeration size", MAX_H_K, k_max)?;
    let catalan_identity = (0..=n_max).map(|n| (n, catalan(n + 1), catalan_identity_sum(n))).collect();
    let mut sxy = Vec::new();
    for n in 0..=n_max.min(MAX_SXY_N) {
        for ((x, y), count) in sxy_enumerated(n)? {
            sxy.push((n, x, y, count, sxy_formula(n, x, y)));
        }
    }
    let rec = h_by_recurrence(k_max);
    let h = (1..=k_max).map(|k| Ok((k, h_by_enumeration(k)?, rec[k].clone(), h_closed_form(k)))).collect::<Result<Vec<_>>>()?;
    let mut f = Vec::new();
    for n in 1..=n_max.min(8) {
        for x in 0..=n {
            let (num, den) = f_average(n, x)?;
            if den.is_zero() {
                continue;
            }
            let two_n = 2f64.powi(n as i32);
            f.push((n, x, ratio(&num, &den), two_n * 0.5f64.powi(x as i32), two_n * 0.75f64.powi(x as i32)));
        }
    }
    Ok(AppendixReport { catalan_identity, sxy, h, f, trajectories: trajectories(30.max(n_max)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disconnected_twin_classes() {
        let p: DyckPath = "00101101".parse().unwrap();
        assert_eq!(p.components().iter().map(ToString::to_string).collect::<Vec<_>>(), ["001011", "01"]);
        let classes = graph_twin_classes(&p);
        assert_eq!(classes.blocks(), [vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(classes.weight(), BigUint::from(16u32));
        let clique: DyckPath = "000111".parse().unwrap();
        assert_eq!(graph_twin_classes(&clique).weight(), BigUint::from(4u32));
    }

    #[test]
    fn dyck_counts() {
        assert_eq!(DyckWords::new(2).count(), 2);
        assert_eq!(DyckWords::new(4).count(), 14);
        assert_eq!(enum_dyck_graphs(3, true).unwrap().count(), 2);
        assert_eq!(DyckWords::new(0).count(), 1);
        assert!(enum_dyck_graphs(17, false).is_err());
        let words: Vec<String> = DyckWords::new(3).map(|p| p.to_string()).collect();
        assert_eq!(words, ["000111", "001011", "001101", "010011", "010101"]);
        assert!("0110".parse::<DyckPath>().is_err());
        assert!("(())".parse::<DyckPath>().unwrap().is_irreducible());
        assert!(!"0101".parse::<DyckPath>().unwrap().is_irreducible());
    }

    #[test]
    fn small_weights() {
        assert_eq!("()()".parse::<DyckPath>().unwrap().weight(), BigUint::from(3u32));
        assert_eq!("(())".parse::<DyckPath>().unwrap().weight(), BigUint::from(4u32));
        assert_eq!(cbar_by_enumeration(2).unwrap(), BigUint::from(7u32));
        assert_eq!(cbar_by_enumeration(0).unwrap(), BigUint::one());
    }

    #[test]
    fn g15_twins() {
        let g = ProperIntervalGraph::parse("000001000101001110011011011111", false).unwrap();
        let (classes, w) = twin_blocks_and_weight(&g).unwrap();
        let pairs: Vec<&Vec<usize>> = classes.blocks().iter().filter(|b| b.len() > 1).collect();
        assert_eq!(pairs, [&vec![4, 5], &vec![7, 8], &vec![12, 13]]);
        assert_eq!(classes.sizes().len(), 12);
        assert_eq!(w, BigUint::from(13824u32));
        let k5 = ProperIntervalGraph::parse("0000011111", false).unwrap();
        assert_eq!(twin_blocks_and_weight(&k5).unwrap().1, BigUint::from(6u32));
        let k1 = ProperIntervalGraph::parse("01", false).unwrap();
        assert_eq!(twin_blocks_and_weight(&k1).unwrap().1, BigUint::from(2u32));
    }

    #[test]
    fn series_agree() {
        let s = weighted_series(40);
        assert_eq!(s.cbar, s.cbar_gf);
        assert_eq!(s.cbar[0], BigUint::one());
        assert_eq!(s.cbar[2], BigUint::from(7u32));
        for n in 0..=8 {
            assert_eq!(s.cbar[n], cbar_by_enumeration(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn composition_example() {
        let c = CompositionRepr::from_endpoints("1101011000", true).unwrap();
        assert_eq!(c.left(), [1, 4]);
        assert_eq!(c.right(), [3, 4]);
        assert_eq!(c.shared(), [4]);
        assert_eq!(c.cliques(), vec![vec![1, 2], vec![2, 3], vec![3, 4, 5]]);
        assert_eq!(c.twin_classes(), vec![vec![1], vec![2], vec![3], vec![4, 5]]);
        assert_eq!(c.to_endpoints(), "0010100111");
        assert!(matches!(CompositionRepr::new(3, &[2], &[1]), Err(Error::DyckViolation(2))));
    }

    #[test]
    fn h_values() {
        assert_eq!(h_by_enumeration(1).unwrap(), 2);
        assert_eq!(h_by_enumeration(3).unwrap(), 24);
        let rec = h_by_recurrence(10);
        let last = h_by_last_part(10);
        for k in 1..=10 {
            assert_eq!(BigUint::from(h_by_enumeration(k).unwrap()), rec[k]);
            assert_eq!(rec[k], last[k]);
            assert_eq!(rec[k], h_closed_form(k));
        }
        assert_eq!(h_closed_form(0), BigUint::zero());
    }

    #[test]
    fn catalan_and_sxy() {
        assert_eq!(catalan_identity_sum(3), BigUint::from(14u32));
        for n in 0..=6 {
            for ((x, y), c) in sxy_enumerated(n).unwrap() {
                assert_eq!(BigUint::from(c), sxy_formula(n, x, y));
            }
        }
        for n in 0..=6 {
            assert_eq!(census(n), census_by_enumeration(n).unwrap(), "n = {n}");
        }
    }
}
