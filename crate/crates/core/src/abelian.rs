//! Integer linear algebra for abelianizations.
//!
//! Smith normal form uses exact big integers throughout. The pivot at each
//! step is the entry of smallest nonzero absolute value in the active
//! submatrix, ties broken by lowest `(row, col)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, entries: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    /// An empty-row matrix still remembers its column count.
    pub fn with_cols(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, entries: rows }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r][c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    /// Determinant by fraction-free elimination (Bareiss). Square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.entries {
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// One row per relator, one column per generator: exponent sums.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let cols = p.num_generators();
    let rows = p
        .relators()
        .iter()
        .map(|r| r.exponent_sums(cols).into_iter().map(BigInt::from).collect())
        .collect();
    IntMatrix::with_cols(rows, cols)
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.entries[i][i].clone()).collect()
    }
}

/// What the elimination keeps track of besides `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Track {
    rows: bool,
    cols: bool,
}

struct Elimination {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl Elimination {
    fn new(m: &IntMatrix, track: Track) -> Elimination {
        Elimination {
            a: m.entries.clone(),
            rows: m.rows,
            cols: m.cols,
            u: track.rows.then(|| IntMatrix::identity(m.rows).entries),
            v: track.cols.then(|| IntMatrix::identity(m.cols).entries),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in &mut self.a {
                r.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for r in v.iter_mut() {
                    r.swap(i, j);
                }
            }
        }
    }

    /// row_dst -= q * row_src
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        let (d, s) = pair_mut(&mut self.a, dst, src);
        axpy(d, s, q);
        if let Some(u) = &mut self.u {
            let (d, s) = pair_mut(u, dst, src);
            axpy(d, s, q);
        }
    }

    /// col_dst -= q * col_src
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in &mut self.a {
            if !r[src].is_zero() {
                let t = &r[src] * q;
                r[dst] -= t;
            }
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                if !r[src].is_zero() {
                    let t = &r[src] * q;
                    r[dst] -= t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    /// Smallest nonzero |entry| in rows, cols >= t; first in row-major order on ties.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut best_abs: Option<BigInt> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best_abs.as_ref().is_none_or(|b| ax < *b) {
                    let is_unit = ax.is_one();
                    best = Some((i, j));
                    best_abs = Some(ax);
                    if is_unit {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a[t][t].clone();
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&p);
                    if !q.is_zero() {
                        self.row_sub(i, t, &q);
                    }
                    clean &= self.a[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&p);
                    if !q.is_zero() {
                        self.col_sub(j, t, &q);
                    }
                    clean &= self.a[t][j].is_zero();
                }
                if clean {
                    // Enforce d_t | every remaining entry.
                    let bad = (t + 1..self.rows)
                        .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
                    match bad {
                        None => break,
                        Some(i) => {
                            // row_t += row_i, then re-reduce
                            self.row_sub(t, i, &BigInt::from(-1));
                            continue;
                        }
                    }
                }
                // A nonzero remainder is left; move the new smallest to the pivot.
                let (pi, pj) = self.pivot_in_cross(t);
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }

    /// Smallest nonzero entry of row t or column t (from t on).
    fn pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.a[t][t].abs();
        for i in t + 1..self.rows {
            let x = &self.a[i][t];
            if !x.is_zero() && x.abs() < best_abs {
                best = (i, t);
                best_abs = x.abs();
            }
        }
        for j in t + 1..self.cols {
            let x = &self.a[t][j];
            if !x.is_zero() && x.abs() < best_abs {
                best = (t, j);
                best_abs = x.abs();
            }
        }
        best
    }
}

fn pair_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &T) {
    assert_ne!(i, j);
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &a[j])
    }
}

fn axpy(dst: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= s * q;
        }
    }
}

/// Full Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut e = Elimination::new(m, Track { rows: true, cols: true });
    e.run();
    SmithForm {
        d: IntMatrix { rows: e.rows, cols: e.cols, entries: e.a },
        u: IntMatrix { rows: m.rows, cols: m.rows, entries: e.u.expect("row transform tracked") },
        v: IntMatrix { rows: m.cols, cols: m.cols, entries: e.v.expect("column transform tracked") },
    }
}

fn diagonal_only(m: &IntMatrix, track_cols: bool) -> (Vec<BigInt>, Option<IntMatrix>) {
    let mut e = Elimination::new(m, Track { rows: false, cols: track_cols });
    e.run();
    let diag = (0..e.rows.min(e.cols)).map(|i| e.a[i][i].clone()).collect();
    let v = e.v.map(|v| IntMatrix { rows: m.cols, cols: m.cols, entries: v });
    (diag, v)
}

/// Free rank plus invariant factors `d₁ | d₂ | …`, all `≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    /// Minimal number of generators of the group.
    pub fn min_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_cyclic(&self) -> bool {
        self.min_generators() <= 1
    }

    fn from_diagonal(diag: &[BigInt], cols: usize) -> AbelianInvariants {
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let torsion = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.to_u64().expect("invariant factor exceeds u64"))
            .collect();
        AbelianInvariants { torsion, free_rank: cols - nonzero }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn abelian_invariants_of_matrix(m: &IntMatrix) -> AbelianInvariants {
    let (diag, _) = diagonal_only(m, false);
    AbelianInvariants::from_diagonal(&diag, m.cols)
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let cols = p.num_generators();
    let rows: Vec<SparseRow> = p
        .relators()
        .iter()
        .map(|r| {
            let mut row = SparseRow::new();
            for l in r.letters() {
                *row.entry(l.index() - 1).or_insert(0) += i64::from(l.sign());
            }
            row.retain(|_, v| *v != 0);
            row
        })
        .collect();
    match eliminate_units(rows, cols) {
        Some(m) => abelian_invariants_of_matrix(&m),
        None => abelian_invariants_of_matrix(&relation_matrix(p)),
    }
}

type SparseRow = std::collections::BTreeMap<usize, i64>;

/// Sparse elimination of generators that occur with coefficient ±1 in some
/// relation: the relation expresses that generator through the others, so the
/// row and column can both go without changing the cokernel. Returns the dense
/// remainder, or `None` on `i64` overflow.
fn eliminate_units(rows: Vec<SparseRow>, cols: usize) -> Option<IntMatrix> {
    let mut rows: Vec<Option<SparseRow>> = rows.into_iter().map(|r| (!r.is_empty()).then_some(r)).collect();
    let mut in_col: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); cols];
    for (i, r) in rows.iter().enumerate() {
        for &c in r.iter().flat_map(|r| r.keys()) {
            in_col[c].insert(i);
        }
    }
    let mut dead_col = vec![false; cols];
    loop {
        let mut order: Vec<(usize, usize)> =
            rows.iter().enumerate().filter_map(|(i, r)| r.as_ref().map(|r| (r.len(), i))).collect();
        order.sort_unstable();
        let mut changed = false;
        for (_, r) in order {
            let Some(row) = rows[r].as_ref() else { continue };
            let pivot = row
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(c, _)| (in_col[**c].len(), **c))
                .map(|(c, v)| (*c, *v));
            let Some((c, a)) = pivot else { continue };
            let pivot_row = rows[r].take().unwrap();
            for &k in pivot_row.keys() {
                in_col[k].remove(&r);
            }
            let others: Vec<usize> = in_col[c].iter().copied().collect();
            for i in others {
                let target = rows[i].as_mut().unwrap();
                // row_i -= (a_ic / a) · pivot_row, with 1/a = a.
                let f = target[&c].checked_mul(a)?;
                for (&k, &v) in &pivot_row {
                    let entry = target.entry(k).or_insert(0);
                    *entry = entry.checked_sub(f.checked_mul(v)?)?;
                    if *entry == 0 {
                        target.remove(&k);
                        in_col[k].remove(&i);
                    } else {
                        in_col[k].insert(i);
                    }
                }
                if target.is_empty() {
                    rows[i] = None;
                }
            }
            dead_col[c] = true;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let live: Vec<usize> = (0..cols).filter(|&c| !dead_col[c]).collect();
    let mut index = vec![usize::MAX; cols];
    for (k, &c) in live.iter().enumerate() {
        index[c] = k;
    }
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    for row in rows.into_iter().flatten() {
        let mut dense = vec![BigInt::zero(); live.len()];
        for (c, v) in row {
            dense[index[c]] = BigInt::from(v);
        }
        kept.push(dense);
    }
    kept.sort();
    kept.dedup();
    Some(IntMatrix::with_cols(kept, live.len()))
}

/// Lower bound on the number of (normal) generators: generators needed by the abelianization.
pub fn min_gens_lower_bound(p: &Presentation) -> usize {
    abelian_invariants(p).min_generators()
}

/// The abelianization map `G → Z^r ⊕ Z_{d₁} ⊕ …`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    invariants: AbelianInvariants,
    /// Column transform from the SNF.
    v: IntMatrix,
    /// Diagonal entries, one per column (0 beyond the diagonal).
    diag: Vec<BigInt>,
}

/// Image of a word in the abelianization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianImage {
    /// Coordinates in the free part.
    pub free: Vec<BigInt>,
    /// Residues modulo each torsion factor, in the order of `torsion`.
    pub torsion: Vec<u64>,
}

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(|&x| x == 0)
    }
}

impl Abelianization {
    pub fn new(p: &Presentation) -> Abelianization {
        let m = relation_matrix(p);
        let (mut diag, v) = diagonal_only(&m, true);
        diag.resize(m.cols, BigInt::zero());
        Abelianization {
            invariants: AbelianInvariants::from_diagonal(&diag, m.cols),
            v: v.expect("column transform requested"),
            diag,
        }
    }

    pub fn invariants(&self) -> &AbelianInvariants {
        &self.invariants
    }

    pub fn image_of_exponents(&self, exps: &[i64]) -> AbelianImage {
        let n = self.v.cols;
        assert_eq!(exps.len(), n, "exponent vector length");
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for j in 0..n {
            let mut y = BigInt::zero();
            for (i, &e) in exps.iter().enumerate() {
                if e != 0 {
                    y += self.v.get(i, j) * e;
                }
            }
            let d = &self.diag[j];
            if d.is_zero() {
                free.push(y);
            } else if !d.is_one() {
                torsion.push(y.mod_floor(d).to_u64().expect("residue fits u64"));
            }
        }
        AbelianImage { free, torsion }
    }

    pub fn image(&self, w: &Word) -> AbelianImage {
        self.image_of_exponents(&w.exponent_sums(self.v.cols))
    }

    /// Componentwise sum in the abelian group.
    pub fn add(&self, x: &AbelianImage, y: &AbelianImage) -> AbelianImage {
        let free = x.free.iter().zip(&y.free).map(|(a, b)| a + b).collect();
        let torsion = x
            .torsion
            .iter()
            .zip(&y.torsion)
            .zip(&self.invariants.torsion)
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        AbelianImage { free, torsion }
    }

    /// Order of an image, `None` if it has infinite order.
    pub fn element_order(&self, x: &AbelianImage) -> Option<u64> {
        if x.free.iter().any(|f| !f.is_zero()) {
            return None;
        }
        Some(
            x.torsion
                .iter()
                .zip(&self.invariants.torsion)
                .map(|(&a, &d)| d / num_integer::gcd(a, d))
                .fold(1, num_integer::lcm),
        )
    }
}

/// Convenience: `abelianized_image(p, w)`.
pub fn abelianized_image(p: &Presentation, w: &Word) -> Result<AbelianImage> {
    p.alphabet().check(w)?;
    Ok(Abelianization::new(p).image(w))
}
