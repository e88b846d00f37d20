//! Integer row-style Hermite and Smith normal forms, integer linear solving and a
//! small nonnegative feasibility solver for lattice problems.

use crate::prelude::*;
use crate::Rational;
use num_integer::Integer;

/// Row-style Hermite normal form together with the unimodular transform.
///
/// `transform * input == hnf`. The first `rank` rows of `hnf` are nonzero, each
/// has a positive pivot strictly right of the previous one, and entries above a
/// pivot are reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hermite {
    pub hnf: Vec<Vec<i64>>,
    pub transform: Vec<Vec<i64>>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn fdiv(a: i64, b: i64) -> i64 {
    Integer::div_floor(&a, &b)
}

fn row_axpy(rows: &mut [Vec<i64>], dst: usize, src: usize, q: i64) {
    if q == 0 {
        return;
    }
    let (a, b) = if dst < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * *y;
    }
}

fn negate_row(row: &mut [i64]) {
    for x in row.iter_mut() {
        *x = -*x;
    }
}

/// Computes the Hermite normal form of the rows of `m` (all rows of length `cols`).
pub fn hermite(m: &[Vec<i64>], cols: usize) -> Hermite {
    let n = m.len();
    let mut h: Vec<Vec<i64>> = m.to_vec();
    for row in &h {
        assert_eq!(row.len(), cols, "ragged matrix");
    }
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        if r == n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..n {
                if h[i][col] != 0 && best.is_none_or(|b| h[i][col].abs() < h[b][col].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap(r, b);
            u.swap(r, b);
            let mut done = true;
            for i in r + 1..n {
                if h[i][col] != 0 {
                    let q = fdiv(h[i][col], h[r][col]);
                    row_axpy(&mut h, i, r, q);
                    row_axpy(&mut u, i, r, q);
                    if h[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][col] == 0 {
            continue;
        }
        if h[r][col] < 0 {
            negate_row(&mut h[r]);
            negate_row(&mut u[r]);
        }
        let p = h[r][col];
        for i in 0..r {
            let q = fdiv(h[i][col], p);
            row_axpy(&mut h, i, r, q);
            row_axpy(&mut u, i, r, q);
        }
        pivots.push(col);
        r += 1;
    }
    Hermite { hnf: h, transform: u, rank: r, pivots }
}

/// Reduces `v` modulo the row lattice of a Hermite form; returns the remainder.
///
/// The remainder is zero exactly when `v` lies in the lattice.
pub fn reduce(h: &Hermite, v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    for (i, &col) in h.pivots.iter().enumerate() {
        let q = fdiv(v[col], h.hnf[i][col]);
        if q != 0 {
            for (x, y) in v.iter_mut().zip(&h.hnf[i]) {
                *x -= q * *y;
            }
        }
    }
    v
}

/// Solution set of `x * M = target` over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSolution {
    pub particular: Vec<i64>,
    /// Basis of the integer left kernel of `M`.
    pub kernel: Vec<Vec<i64>>,
}

/// Solves `x * m = target` for integer `x`; `None` when no integer solution exists.
pub fn solve_left(m: &[Vec<i64>], cols: usize, target: &[i64]) -> Option<IntSolution> {
    let h = hermite(m, cols);
    let mut rem = target.to_vec();
    let mut y = vec![0i64; m.len()];
    for (i, &col) in h.pivots.iter().enumerate() {
        let p = h.hnf[i][col];
        if rem[col] % p != 0 {
            return None;
        }
        let q = rem[col] / p;
        y[i] = q;
        for (x, z) in rem.iter_mut().zip(&h.hnf[i]) {
            *x -= q * *z;
        }
    }
    if rem.iter().any(|&x| x != 0) {
        return None;
    }
    let mut particular = vec![0i64; m.len()];
    for (i, &yi) in y.iter().enumerate() {
        if yi != 0 {
            for (x, u) in particular.iter_mut().zip(&h.transform[i]) {
                *x += yi * *u;
            }
        }
    }
    let kernel = h.transform[h.rank..].to_vec();
    Some(IntSolution { particular, kernel })
}

/// Nonzero Smith invariants of `m`, each dividing the next.
pub fn smith_invariants(m: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // choose the smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = fdiv(a[i][t], p);
                if q != 0 {
                    row_axpy(&mut a, i, t, q);
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = fdiv(a[t][j], p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // normalize to divisibility order
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Outcome of a nonnegative integer feasibility query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<i64>),
    Infeasible,
    /// The search budget ran out before a decision was reached.
    Unknown,
}

/// Decides whether `Σ ν_i gens_i ≡ target` has a solution with every `ν_i ≥ 0`.
///
/// Coordinates `0..free` are exact, coordinate `free + j` is taken modulo `moduli[j]`.
/// `budget` caps the number of integer points tried in the final box search.
pub fn nonneg_combination(
    gens: &[Vec<i64>],
    free: usize,
    moduli: &[i64],
    target: &[i64],
    budget: usize,
) -> Feasibility {
    let n = gens.len();
    let dim = free + moduli.len();
    if n == 0 {
        let zero = target
            .iter()
            .enumerate()
            .all(|(i, &x)| if i < free { x == 0 } else { x.rem_euclid(moduli[i - free]) == 0 });
        return if zero { Feasibility::Feasible(Vec::new()) } else { Feasibility::Infeasible };
    }
    let mut m: Vec<Vec<i64>> = gens.to_vec();
    for (j, &q) in moduli.iter().enumerate() {
        let mut row = vec![0i64; dim];
        row[free + j] = q;
        m.push(row);
    }
    let Some(sol) = solve_left(&m, dim, target) else {
        return Feasibility::Infeasible;
    };
    let x0: Vec<i64> = sol.particular[..n].to_vec();
    let kern: Vec<Vec<i64>> = sol.kernel.iter().map(|k| k[..n].to_vec()).collect();

    // generators of finite order may be shifted by their order freely
    let period: Vec<Option<i64>> = gens
        .iter()
        .map(|g| {
            if g[..free].iter().any(|&x| x != 0) {
                return None;
            }
            let mut o = 1i64;
            for (j, &q) in moduli.iter().enumerate() {
                let v = g[free + j].rem_euclid(q);
                o = o.lcm(&(q / v.gcd(&q)));
            }
            Some(o)
        })
        .collect();
    let constrained: Vec<usize> = (0..n).filter(|&i| period[i].is_none()).collect();

    let finish = |mut x: Vec<i64>| {
        for i in 0..n {
            if let Some(o) = period[i] {
                x[i] = x[i].rem_euclid(o);
            }
        }
        Feasibility::Feasible(x)
    };

    if constrained.iter().all(|&i| x0[i] >= 0) {
        return finish(x0);
    }
    let kc: Vec<Vec<i64>> = kern
        .iter()
        .map(|k| constrained.iter().map(|&i| k[i]).collect::<Vec<_>>())
        .filter(|k: &Vec<i64>| k.iter().any(|&x| x != 0))
        .collect();
    if kc.is_empty() {
        return Feasibility::Infeasible;
    }
    // rational relaxation: x0_C + y K_C >= 0
    let rows: Vec<(Vec<Rational>, Rational)> = constrained
        .iter()
        .enumerate()
        .map(|(ci, &i)| {
            (
                kc.iter().map(|k| Rational::from_integer(k[ci])).collect(),
                Rational::from_integer(x0[i]),
            )
        })
        .collect();
    if !fourier_motzkin_feasible(rows, kc.len()) {
        return Feasibility::Infeasible;
    }
    let q = kc.len();
    let full_kern: Vec<&Vec<i64>> = kern
        .iter()
        .filter(|k| constrained.iter().any(|&i| k[i] != 0))
        .collect();
    let mut tried = 0usize;
    let mut radius = 1i64;
    loop {
        let mut y = vec![-radius; q];
        loop {
            if y.iter().any(|v| v.abs() == radius) {
                tried += 1;
                if tried > budget {
                    return Feasibility::Unknown;
                }
                let mut x = x0.clone();
                for (yk, k) in y.iter().zip(&full_kern) {
                    for (xi, ki) in x.iter_mut().zip(k.iter()) {
                        *xi += yk * ki;
                    }
                }
                if constrained.iter().all(|&i| x[i] >= 0) {
                    return finish(x);
                }
            }
            let mut p = 0;
            loop {
                if p == q {
                    break;
                }
                if y[p] < radius {
                    y[p] += 1;
                    break;
                }
                y[p] = -radius;
                p += 1;
            }
            if p == q {
                break;
            }
        }
        radius += 1;
    }
}

/// Feasibility of `{ y : a·y + b >= 0 for every row (a, b) }` over the rationals.
fn fourier_motzkin_feasible(mut rows: Vec<(Vec<Rational>, Rational)>, vars: usize) -> bool {
    let zero = Rational::from_integer(0);
    for v in (0..vars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows.drain(..) {
            if r.0[v] > zero {
                pos.push(r);
            } else if r.0[v] < zero {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                let (sp, sq) = (-q.0[v], p.0[v]);
                let a: Vec<Rational> = p.0.iter().zip(&q.0).map(|(x, y)| *x * sp + *y * sq).collect();
                let b = p.1 * sp + q.1 * sq;
                rest.push((a, b));
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    rows.iter().all(|r| r.1 >= zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let cols = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|r| (0..cols).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
            .collect()
    }

    #[test]
    fn hermite_of_diagonal_lattice() {
        let h = hermite(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(h.hnf, vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(h.rank, 2);
    }

    #[test]
    fn hermite_transform_reproduces() {
        let m = vec![vec![4, 6, 2], vec![2, 3, 7], vec![6, 9, 9]];
        let h = hermite(&m, 3);
        assert_eq!(mul(&h.transform, &m), h.hnf);
        assert_eq!(h.rank, 2);
        assert!(h.hnf[2].iter().all(|&x| x == 0));
    }

    #[test]
    fn solve_and_kernel() {
        let m = vec![vec![2, 0], vec![0, 3], vec![2, 3]];
        let s = solve_left(&m, 2, &[4, 9]).unwrap();
        assert_eq!(mul(std::slice::from_ref(&s.particular), &m)[0], vec![4, 9]);
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(mul(&s.kernel, &m)[0], vec![0, 0]);
        assert!(solve_left(&m, 2, &[1, 0]).is_none());
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 4]], 2), vec![2, 4]);
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![4, 6]], 2), vec![2]);
        assert_eq!(smith_invariants(&[vec![0, 0]], 2), Vec::<i64>::new());
    }

    #[test]
    fn reduce_membership() {
        let h = hermite(&[vec![2, 0], vec![1, 3]], 2);
        assert!(reduce(&h, &[3, 3]).iter().all(|&x| x == 0));
        assert!(reduce(&h, &[1, 0]).iter().any(|&x| x != 0));
    }

    #[test]
    fn nonneg_needs_kernel_shift() {
        // ν0 (1) + ν1 (-1) = 3 with ν >= 0 has solutions
        let r = nonneg_combination(&[vec![1], vec![-1]], 1, &[], &[3], 100);
        let Feasibility::Feasible(x) = r else { panic!() };
        assert!(x.iter().all(|&v| v >= 0));
        assert_eq!(x[0] - x[1], 3);
    }

    #[test]
    fn nonneg_infeasible_by_sign() {
        assert_eq!(nonneg_combination(&[vec![1]], 1, &[], &[-2], 100), Feasibility::Infeasible);
        assert_eq!(
            nonneg_combination(&[vec![1, 1], vec![2, 2]], 2, &[], &[-1, -1], 100),
            Feasibility::Infeasible
        );
    }

    #[test]
    fn nonneg_torsion_is_free() {
        // ν·2 ≡ 4 (mod 6): 2 is of finite order, sign constraint disappears
        let r = nonneg_combination(&[vec![2]], 0, &[6], &[4], 100);
        assert!(matches!(r, Feasibility::Feasible(ref x) if x[0] >= 0 && (2 * x[0] - 4) % 6 == 0));
        assert_eq!(nonneg_combination(&[vec![2]], 0, &[6], &[3], 100), Feasibility::Infeasible);
    }

    #[test]
    fn nonneg_zero_target() {
        let r = nonneg_combination(&[vec![1, 0], vec![0, 1]], 2, &[], &[0, 0], 10);
        assert_eq!(r, Feasibility::Feasible(vec![0, 0]));
    }
}
