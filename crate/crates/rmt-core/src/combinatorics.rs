//! Moment combinatorics: Dyck paths, rooted plane trees, Catalan numbers,
//! and an exact brute-force trace-moment oracle.
//!
//! The trace moment `(1/n)·E tr(X^k)` of a Wigner matrix expands into a sum
//! over index words `i_1 → i_2 → … → i_k → i_1`; independence of the entries
//! factorizes each word's expectation into per-edge moments of the entry law.
//! [`exact_trace_moment`] performs that sum exactly (wide-integer word
//! enumeration, floating point only in the final moment products), which
//! makes it an oracle for the Catalan limit rather than a consumer of it.

#[allow(unused_imports)]
use crate::float::FloatExt;

use alloc::vec;
use alloc::vec::Vec;

/// Errors from combinatorial operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombinatoricsError {
    /// Dyck paths exist only for even lengths.
    OddLength,
    /// Enumeration request beyond the supported size.
    TooLarge,
    /// Exact integer arithmetic would overflow.
    Overflow,
    /// A step sequence is not a valid Dyck path.
    MalformedPath,
    /// The word-sum budget `n^k ≤ 10^7` is exceeded.
    BudgetExceeded,
    /// The entry-moment table does not cover a multiplicity that occurs.
    MomentTableTooShort,
}

impl core::fmt::Display for CombinatoricsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CombinatoricsError::OddLength => write!(f, "Dyck path length must be even"),
            CombinatoricsError::TooLarge => write!(f, "enumeration size out of supported range"),
            CombinatoricsError::Overflow => write!(f, "exact integer arithmetic overflowed"),
            CombinatoricsError::MalformedPath => write!(f, "not a valid Dyck path"),
            CombinatoricsError::BudgetExceeded => {
                write!(f, "word enumeration exceeds the n^k budget")
            }
            CombinatoricsError::MomentTableTooShort => {
                write!(f, "entry moment table too short for an occurring multiplicity")
            }
        }
    }
}

impl core::error::Error for CombinatoricsError {}

/// Exact binomial coefficient `C(n, k)` in 128-bit arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<u128, CombinatoricsError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // Each partial product is C(n−k+i, i), an integer, so the division
        // below is exact.
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or(CombinatoricsError::Overflow)?
            / i as u128;
    }
    Ok(acc)
}

/// Exact Catalan number `C_m = binom(2m, m)/(m+1)`.
pub fn catalan(m: u32) -> Result<u128, CombinatoricsError> {
    let mut acc: u128 = 1;
    for j in 1..=(m as u128) {
        // C_j = C_{j−1} · 2(2j−1)/(j+1); the division is exact.
        acc = acc
            .checked_mul(2 * (2 * j - 1))
            .ok_or(CombinatoricsError::Overflow)?
            / (j + 1);
    }
    Ok(acc)
}

/// A lattice path of ±1 steps staying nonnegative and returning to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyckPath {
    steps: Vec<i8>,
}

impl DyckPath {
    /// Validates the Dyck conditions: even length, steps ±1, partial sums
    /// nonnegative, total sum zero.
    pub fn new(steps: Vec<i8>) -> Result<Self, CombinatoricsError> {
        if steps.len() % 2 != 0 {
            return Err(CombinatoricsError::OddLength);
        }
        let mut height: i32 = 0;
        for &s in &steps {
            if s != 1 && s != -1 {
                return Err(CombinatoricsError::MalformedPath);
            }
            height += s as i32;
            if height < 0 {
                return Err(CombinatoricsError::MalformedPath);
            }
        }
        if height != 0 {
            return Err(CombinatoricsError::MalformedPath);
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// All Dyck paths of length `k` (even, `k ≤ 24`), in lexicographic order of
/// their step sequences with +1 ordered before −1.
pub fn enumerate_dyck_paths(k: usize) -> Result<Vec<DyckPath>, CombinatoricsError> {
    if k % 2 != 0 {
        return Err(CombinatoricsError::OddLength);
    }
    if k > 24 {
        return Err(CombinatoricsError::TooLarge);
    }
    let mut out = Vec::new();
    let mut steps: Vec<i8> = Vec::with_capacity(k);
    fn recurse(steps: &mut Vec<i8>, height: i32, k: usize, out: &mut Vec<DyckPath>) {
        if steps.len() == k {
            if height == 0 {
                out.push(DyckPath { steps: steps.clone() });
            }
            return;
        }
        let remaining = (k - steps.len()) as i32;
        // Prune: must be able to come back down to zero.
        if height > remaining {
            return;
        }
        steps.push(1);
        recurse(steps, height + 1, k, out);
        steps.pop();
        if height > 0 {
            steps.push(-1);
            recurse(steps, height - 1, k, out);
            steps.pop();
        }
    }
    recurse(&mut steps, 0, k, &mut out);
    Ok(out)
}

/// Rooted tree with ordered children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPlaneTree {
    children: Vec<RootedPlaneTree>,
}

impl RootedPlaneTree {
    pub fn leaf() -> Self {
        RootedPlaneTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<RootedPlaneTree>) -> Self {
        RootedPlaneTree { children }
    }

    pub fn children(&self) -> &[RootedPlaneTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }
}

/// The classical bijection: each +1 step descends into a fresh child, each
/// −1 step returns to the parent; the path height is the tree depth.
pub fn dyck_to_tree(path: &DyckPath) -> RootedPlaneTree {
    fn parse(steps: &[i8], pos: &mut usize) -> RootedPlaneTree {
        let mut children = Vec::new();
        while *pos < steps.len() && steps[*pos] == 1 {
            *pos += 1;
            children.push(parse(steps, pos));
            // Matching −1 step.
            debug_assert_eq!(steps[*pos], -1);
            *pos += 1;
        }
        RootedPlaneTree { children }
    }
    let mut pos = 0;
    parse(path.steps(), &mut pos)
}

/// Inverse of [`dyck_to_tree`]: preorder traversal, +1 on descent, −1 on
/// return.
pub fn tree_to_dyck(tree: &RootedPlaneTree) -> DyckPath {
    fn emit(t: &RootedPlaneTree, steps: &mut Vec<i8>) {
        for c in &t.children {
            steps.push(1);
            emit(c, steps);
            steps.push(-1);
        }
    }
    let mut steps = Vec::with_capacity(2 * tree.edge_count());
    emit(tree, &mut steps);
    DyckPath { steps }
}

/// Exact finite-`n` expectation of `(1/n)·E tr(X^k)` for a Wigner matrix
/// with entries `X_ij = Z_ij/√n`, `Z` iid for `i ≤ j` with moments
/// `moment_table[p] = E Z^p` (so `moment_table[0] = 1`).
///
/// The sum runs over all `n^k` index words; each word's expectation
/// factorizes over the distinct matrix entries it visits. The budget
/// `n^k ≤ 10^7` keeps the brute force honest and fast.
pub fn exact_trace_moment(
    n: usize,
    k: usize,
    moment_table: &[f64],
) -> Result<f64, CombinatoricsError> {
    if n == 0 || k == 0 {
        // tr(X^0) = n, so the normalized moment is 1 for any nonempty matrix.
        return if n == 0 { Err(CombinatoricsError::TooLarge) } else { Ok(1.0) };
    }
    let words = (n as u128).checked_pow(k as u32).ok_or(CombinatoricsError::BudgetExceeded)?;
    if words > 10_000_000 {
        return Err(CombinatoricsError::BudgetExceeded);
    }
    if moment_table.is_empty() {
        return Err(CombinatoricsError::MomentTableTooShort);
    }

    // Per-edge scaled moments: moment_table[p] · n^{−p/2}.
    let sqrt_n_inv = 1.0 / (n as f64).sqrt();
    let scaled: Vec<f64> = moment_table
        .iter()
        .enumerate()
        .map(|(p, &m)| m * sqrt_n_inv.powi(p as i32))
        .collect();

    let mut word = vec![0usize; k];
    // Edge multiset of the current word: ((min, max), multiplicity).
    let mut edges: Vec<((usize, usize), usize)> = Vec::with_capacity(k);
    let mut total = 0.0_f64;
    loop {
        edges.clear();
        for pos in 0..k {
            let a = word[pos];
            let b = word[(pos + 1) % k];
            let key = (a.min(b), a.max(b));
            match edges.iter_mut().find(|(e, _)| *e == key) {
                Some((_, mult)) => *mult += 1,
                None => edges.push((key, 1)),
            }
        }
        let mut product = 1.0_f64;
        for &(_, mult) in &edges {
            match scaled.get(mult) {
                Some(&m) => product *= m,
                None => return Err(CombinatoricsError::MomentTableTooShort),
            }
            if product == 0.0 {
                break;
            }
        }
        total += product;

        // Odometer increment over [n]^k.
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(total / n as f64);
            }
            word[pos] += 1;
            if word[pos] < n {
                break;
            }
            word[pos] = 0;
            pos += 1;
        }
    }
}

/// Moment table of the standard Gaussian: `E Z^p` = 0 for odd `p`,
/// `(p−1)!!` for even `p`.
pub fn gaussian_moment_table(max_order: usize) -> Vec<f64> {
    let mut t = vec![0.0; max_order + 1];
    t[0] = 1.0;
    let mut double_fact = 1.0;
    let mut p = 2;
    while p <= max_order {
        double_fact *= (p - 1) as f64;
        t[p] = double_fact;
        p += 2;
    }
    t
}
