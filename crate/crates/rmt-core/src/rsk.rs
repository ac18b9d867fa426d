//! Longest increasing subsequences, the Robinson–Schensted–Knuth
//! correspondence, tableau counting, and last passage percolation.
//!
//! Everything here is exact: subsequence lengths and passage times are
//! integers, tableau counts use checked 128-bit arithmetic, and the RSK
//! bijection is implemented in both directions so round-trips can be
//! verified literally. The only floating point in the module is the
//! geometric sampler's inversion step.
//!
//! The headline identities — Schensted's theorem (`lis_length` = top-row
//! length, `lds_length` = row count of the insertion tableau), the
//! census `Σ_λ f(λ)² = n!`, and the equality of passage times with
//! top-row lengths under generalized RSK — are all exercised
//! exhaustively in the tests.

#[allow(unused_imports)]
use crate::float::FloatExt;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rng::RngState;

/// Errors from combinatorial constructors and counters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RskError {
    /// One-line notation must be a bijection on 1..n.
    NotAPermutation,
    /// Partition parts must be positive and weakly decreasing.
    BadDiagram,
    /// A tableau filling violates its row/column ordering rules.
    BadTableau,
    /// The two tableaux of an RSK pair must have identical shapes.
    ShapeMismatch,
    /// A count does not fit in 128 bits.
    Overflow,
    /// The row count `r` must satisfy `1 ≤ r ≤ n`.
    BadRowCount,
    /// A weight grid must be nonempty and rectangular.
    BadGrid,
    /// The geometric parameter must lie strictly between 0 and 1.
    BadQ,
}

impl fmt::Display for RskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotAPermutation => write!(f, "not a bijection on 1..n"),
            Self::BadDiagram => write!(f, "parts must be positive and weakly decreasing"),
            Self::BadTableau => write!(f, "invalid tableau filling"),
            Self::ShapeMismatch => write!(f, "tableaux have different shapes"),
            Self::Overflow => write!(f, "count does not fit in 128 bits"),
            Self::BadRowCount => write!(f, "row count must satisfy 1 <= r <= n"),
            Self::BadGrid => write!(f, "weight grid must be nonempty and rectangular"),
            Self::BadQ => write!(f, "geometric parameter must satisfy 0 < q < 1"),
        }
    }
}

impl core::error::Error for RskError {}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// From one-line notation; every value in 1..n must appear exactly once.
    pub fn new(one_line: Vec<usize>) -> Result<Self, RskError> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(RskError::NotAPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Self { map: one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (1..=n).collect(),
        }
    }

    /// Uniform random permutation by Fisher–Yates.
    pub fn sample(n: usize, rng: &mut RngState) -> Self {
        let mut map: Vec<usize> = (1..=n).collect();
        rng.shuffle(&mut map);
        Self { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// A partition `λ_1 ≥ λ_2 ≥ … ≥ λ_r > 0` drawn as left-justified rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self, RskError> {
        if parts.is_empty()
            || parts.iter().any(|&p| p == 0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(RskError::BadDiagram);
        }
        Ok(Self { parts })
    }

    /// The size `n = Σ λ_i` of the partitioned integer.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
}

fn shape_is_valid(rows: &[Vec<usize>]) -> bool {
    !rows.iter().any(|r| r.is_empty())
        && rows.windows(2).all(|w| w[0].len() >= w[1].len())
}

fn columns_strictly_increase(rows: &[Vec<usize>]) -> bool {
    rows.windows(2).all(|w| {
        w[1].iter().enumerate().all(|(j, &below)| w[0][j] < below)
    })
}

/// A standard Young tableau: a diagram filled bijectively by `1..n`,
/// strictly increasing along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, RskError> {
        if !shape_is_valid(&rows) {
            return Err(RskError::BadDiagram);
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v - 1] {
                    return Err(RskError::BadTableau);
                }
                seen[v - 1] = true;
            }
        }
        let rows_increase = rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]));
        if !rows_increase || !columns_strictly_increase(&rows) {
            return Err(RskError::BadTableau);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// A semistandard Young tableau: positive entries weakly increasing
/// along rows and strictly increasing down columns. May be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistandardTableau {
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, RskError> {
        if !shape_is_valid(&rows) {
            return Err(RskError::BadDiagram);
        }
        let entries_ok = rows
            .iter()
            .all(|r| r.iter().all(|&v| v > 0) && r.windows(2).all(|w| w[0] <= w[1]));
        if !entries_ok || !columns_strictly_increase(&rows) {
            return Err(RskError::BadTableau);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

/// A nonempty rectangular grid of nonnegative integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    w: Vec<u64>,
}

impl WeightMatrix {
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self, RskError> {
        if rows.is_empty() || rows[0].as_ref().is_empty() {
            return Err(RskError::BadGrid);
        }
        let cols = rows[0].as_ref().len();
        let mut w = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.as_ref().len() != cols {
                return Err(RskError::BadGrid);
            }
            w.extend_from_slice(row.as_ref());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            w,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Weight at 0-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.w[i * self.cols + j]
    }

    /// Total weight — the length of the generalized permutation.
    pub fn total(&self) -> u64 {
        self.w.iter().sum()
    }
}

/// A two-row array whose columns `(i_k, j_k)` are sorted lexicographically;
/// the column `(i, j)` appears `w_ij` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedPermutation {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl GeneralizedPermutation {
    /// Expand a weight matrix into its generalized permutation; the
    /// row-major scan yields lexicographic column order by construction.
    pub fn from_weight_matrix(w: &WeightMatrix) -> Self {
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for i in 0..w.rows() {
            for j in 0..w.cols() {
                for _ in 0..w.get(i, j) {
                    top.push(i + 1);
                    bottom.push(j + 1);
                }
            }
        }
        Self { top, bottom }
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }
}

/// Length of the longest strictly increasing subsequence, by patience
/// sorting in `O(n log n)`.
pub fn lis_length(p: &Permutation) -> usize {
    longest_run(p.as_slice(), false)
}

/// Length of the longest strictly decreasing subsequence.
pub fn lds_length(p: &Permutation) -> usize {
    longest_run(p.as_slice(), true)
}

fn longest_run(seq: &[usize], decreasing: bool) -> usize {
    let n = seq.len();
    let mut tails: Vec<usize> = Vec::new();
    for &raw in seq {
        // A decreasing run in x is an increasing run in n+1−x.
        let x = if decreasing { n + 1 - raw } else { raw };
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// The RSK correspondence by row insertion: returns the insertion
/// tableau `P` and the recording tableau `Q`, always of the same shape.
pub fn rsk(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in p.as_slice().iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p_rows.len() {
                p_rows.push(vec![carry]);
                q_rows.push(vec![step + 1]);
                break;
            }
            // Bump the leftmost entry greater than the carry (entries are
            // distinct, so < and ≤ agree).
            let pos = p_rows[row].partition_point(|&t| t < carry);
            if pos == p_rows[row].len() {
                p_rows[row].push(carry);
                q_rows[row].push(step + 1);
                break;
            }
            core::mem::swap(&mut carry, &mut p_rows[row][pos]);
            row += 1;
        }
    }
    let p_t = StandardTableau::from_rows(p_rows)
        .expect("row insertion yields a standard tableau");
    let q_t = StandardTableau::from_rows(q_rows)
        .expect("recording yields a standard tableau");
    (p_t, q_t)
}

/// Invert RSK: recover the permutation from a same-shape pair `(P, Q)`
/// by reverse bumping, largest recording entry first.
pub fn rsk_inverse(
    p: &StandardTableau,
    q: &StandardTableau,
) -> Result<Permutation, RskError> {
    if p.shape() != q.shape() {
        return Err(RskError::ShapeMismatch);
    }
    let n = p.n();
    let mut p_rows = p.rows().to_vec();
    let mut q_rows = q.rows().to_vec();
    let mut one_line = vec![0usize; n];
    for k in (1..=n).rev() {
        // The largest remaining recording entry sits at an outer corner.
        let row_idx = q_rows
            .iter()
            .position(|r| r.last() == Some(&k))
            .ok_or(RskError::BadTableau)?;
        q_rows[row_idx].pop();
        let mut carry = p_rows[row_idx].pop().ok_or(RskError::BadTableau)?;
        for r in (0..row_idx).rev() {
            // Reverse-bump through the rightmost entry smaller than the
            // carry; column strictness guarantees one exists.
            let pos = p_rows[r].partition_point(|&t| t < carry);
            if pos == 0 {
                return Err(RskError::BadTableau);
            }
            core::mem::swap(&mut carry, &mut p_rows[r][pos - 1]);
        }
        one_line[k - 1] = carry;
        if q_rows[row_idx].is_empty() {
            q_rows.pop();
            p_rows.pop();
        }
    }
    Permutation::new(one_line)
}

/// Generalized RSK on a weight matrix: row-insert the bottom row of the
/// generalized permutation with weak bumping, recording the top row.
/// Both outputs are semistandard and share a shape; the top row of `P`
/// has the length of the longest weakly increasing subsequence of the
/// bottom row — which equals the last passage time [`lpp_grid`].
pub fn rsk_generalized(w: &WeightMatrix) -> (SemistandardTableau, SemistandardTableau) {
    let gp = GeneralizedPermutation::from_weight_matrix(w);
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (&rec, &x) in gp.top().iter().zip(gp.bottom()) {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p_rows.len() {
                p_rows.push(vec![carry]);
                q_rows.push(vec![rec]);
                break;
            }
            // Weak bumping: displace the leftmost entry strictly greater,
            // so rows stay weakly increasing.
            let pos = p_rows[row].partition_point(|&t| t <= carry);
            if pos == p_rows[row].len() {
                p_rows[row].push(carry);
                q_rows[row].push(rec);
                break;
            }
            core::mem::swap(&mut carry, &mut p_rows[row][pos]);
            row += 1;
        }
    }
    let p_t = SemistandardTableau::from_rows(p_rows)
        .expect("weak row insertion yields a semistandard tableau");
    let q_t = SemistandardTableau::from_rows(q_rows)
        .expect("recording a lex-sorted word yields a semistandard tableau");
    (p_t, q_t)
}

fn factorial_u128(n: usize) -> Result<u128, RskError> {
    let mut acc: u128 = 1;
    for k in 2..=n as u128 {
        acc = acc.checked_mul(k).ok_or(RskError::Overflow)?;
    }
    Ok(acc)
}

/// Count standard fillings by the hook length formula
/// `f(λ) = n! / ∏_x hook(x)`, where `hook(x)` counts the cells to the
/// right, below, and `x` itself.
pub fn hook_length_count(d: &YoungDiagram) -> Result<u128, RskError> {
    let parts = d.parts();
    let r = parts.len();
    let n = d.n();
    // Column lengths of the conjugate diagram.
    let mut col_len = vec![0usize; parts[0]];
    for j in 0..parts[0] {
        col_len[j] = (0..r).filter(|&i| parts[i] > j).count();
    }
    let mut hooks: u128 = 1;
    for (i, &len) in parts.iter().enumerate() {
        for j in 0..len {
            let hook = (len - j) + (col_len[j] - i) - 1;
            hooks = hooks.checked_mul(hook as u128).ok_or(RskError::Overflow)?;
        }
    }
    let n_fact = factorial_u128(n)?;
    debug_assert_eq!(n_fact % hooks, 0, "hook product must divide n!");
    Ok(n_fact / hooks)
}

/// Count standard fillings by the Frobenius–Young formula
/// `f(λ) = n! ∏_{i<j}(h_i − h_j) ∏ 1/h_i!` with `h_i = λ_i + (r − i)`.
/// The differences are taken over `i < j` (`h` is strictly decreasing),
/// which keeps every factor positive.
pub fn frobenius_young_count(d: &YoungDiagram) -> Result<u128, RskError> {
    let parts = d.parts();
    let r = parts.len();
    let h: Vec<u128> = parts
        .iter()
        .enumerate()
        .map(|(i, &l)| (l + (r - 1 - i)) as u128)
        .collect();
    let mut num = factorial_u128(d.n())?;
    for i in 0..r {
        for j in (i + 1)..r {
            num = num.checked_mul(h[i] - h[j]).ok_or(RskError::Overflow)?;
        }
    }
    let mut den: u128 = 1;
    for &hi in &h {
        den = den
            .checked_mul(factorial_u128(hi as usize)?)
            .ok_or(RskError::Overflow)?;
    }
    debug_assert_eq!(num % den, 0, "Frobenius-Young quotient must be integral");
    Ok(num / den)
}

fn partitions_with_rows(
    n: usize,
    r: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if r == 0 {
        if n == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // Each of the r remaining parts is ≥ 1, so the next part needs at
    // least ⌈n/r⌉ and at most min(max_part, n − (r − 1)).
    let hi = max_part.min(n.saturating_sub(r - 1));
    let lo = n.div_ceil(r);
    for part in (lo.max(1)..=hi).rev() {
        prefix.push(part);
        partitions_with_rows(n - part, r - 1, part, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` with exactly `r` rows, largest part first.
pub fn partitions_of(n: usize, r: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    partitions_with_rows(n, r, n, &mut prefix, &mut out);
    out.into_iter().map(|parts| YoungDiagram { parts }).collect()
}

/// The number of permutations of `n` whose longest decreasing subsequence
/// has length exactly `r`: by RSK and Schensted this is `Σ f(λ)²` over
/// partitions `λ ⊢ n` with exactly `r` rows.
pub fn count_perms_by_lds(n: usize, r: usize) -> Result<u128, RskError> {
    if r == 0 || r > n {
        return Err(RskError::BadRowCount);
    }
    let mut total: u128 = 0;
    for d in partitions_of(n, r) {
        let f = frobenius_young_count(&d)?;
        total = total
            .checked_add(f.checked_mul(f).ok_or(RskError::Overflow)?)
            .ok_or(RskError::Overflow)?;
    }
    Ok(total)
}

/// Last passage time: the maximum total weight of an up/right lattice
/// path from the lower-left to the upper-right corner of the grid, by
/// dynamic programming `G(i,j) = w_ij + max(G(i−1,j), G(i,j−1))`.
pub fn lpp_grid(w: &WeightMatrix) -> u64 {
    let (r, c) = (w.rows(), w.cols());
    let mut g = vec![0u64; r * c];
    for i in 0..r {
        for j in 0..c {
            let up = if i > 0 { g[(i - 1) * c + j] } else { 0 };
            let left = if j > 0 { g[i * c + (j - 1)] } else { 0 };
            g[i * c + j] = w.get(i, j) + up.max(left);
        }
    }
    g[r * c - 1]
}

/// A grid of iid geometric weights, `P(w_ij = k) = (1−q)q^k`.
pub fn sample_geometric_matrix(
    rows: usize,
    cols: usize,
    q: f64,
    rng: &mut RngState,
) -> Result<WeightMatrix, RskError> {
    if rows == 0 || cols == 0 {
        return Err(RskError::BadGrid);
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(RskError::BadQ);
    }
    let w = (0..rows * cols).map(|_| rng.geometric(q)).collect();
    Ok(WeightMatrix { rows, cols, w })
}
