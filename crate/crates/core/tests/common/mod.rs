//! Brute-force oracles shared by the integration suites. None of them call
//! into the code paths they check.

#![allow(dead_code, clippy::needless_range_loop)]

/// Chords of a convex polygon: vertex `p` sits at `(p, p²)` on a parabola, so
/// two arcs cross iff their chords properly intersect.
pub fn chords_cross(a: (i64, i64), b: (i64, i64)) -> bool {
    let pt = |p: i64| (p as i128, (p as i128) * (p as i128));
    let orient = |o: (i128, i128), x: (i128, i128), y: (i128, i128)| {
        let v = (x.0 - o.0) * (y.1 - o.1) - (x.1 - o.1) * (y.0 - o.0);
        v.signum()
    };
    // shared endpoints touch but never properly intersect
    if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
        return false;
    }
    let (p1, p2, q1, q2) = (pt(a.0), pt(a.1), pt(b.0), pt(b.1));
    let d1 = orient(p1, p2, q1);
    let d2 = orient(p1, p2, q2);
    let d3 = orient(q1, q2, p1);
    let d4 = orient(q1, q2, p2);
    d1 * d2 < 0 && d3 * d4 < 0
}

pub fn admissible(n: i64, t: i64, u: i64) -> bool {
    let len = u - t;
    len >= 2 && (len - 1) % n == 0
}

/// Double loop over all endpoint pairs in `[lo, hi]`.
pub fn all_arcs(n: i64, lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for t in lo..=hi {
        for u in lo..=hi {
            if t < u && admissible(n, t, u) {
                out.push((t, u));
            }
        }
    }
    out
}

/// Smallest arc of the window that can be added to `family`, if any.
pub fn first_addable(n: i64, family: &[(i64, i64)], lo: i64, hi: i64) -> Option<(i64, i64)> {
    all_arcs(n, lo, hi)
        .into_iter()
        .filter(|c| !family.contains(c))
        .find(|c| family.iter().all(|f| !chords_cross(*f, *c)))
}

pub fn is_noncrossing(family: &[(i64, i64)]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family[i + 1..].iter().all(|b| !chords_cross(*a, *b)))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Invariant factors (all nonzero diagonal entries, including 1s) by plain
/// elementary operations: first nonzero entry as pivot, Euclid on pairs of
/// rows and columns, row addition to repair divisibility.
pub fn elementary_invariant_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] != 0)
        else {
            break;
        };
        m.swap(k, pi);
        for r in m.iter_mut() {
            r.swap(k, pj);
        }
        loop {
            // clear column k below the pivot by Euclid between rows
            for i in k + 1..rows {
                while m[i][k] != 0 {
                    let q = m[i][k] / m[k][k];
                    for j in 0..cols {
                        m[i][j] -= q * m[k][j];
                    }
                    if m[i][k] != 0 {
                        m.swap(k, i);
                    }
                }
            }
            // clear row k right of the pivot by Euclid between columns
            for j in k + 1..cols {
                while m[k][j] != 0 {
                    let q = m[k][j] / m[k][k];
                    for r in m.iter_mut() {
                        r[j] -= q * r[k];
                    }
                    if m[k][j] != 0 {
                        for r in m.iter_mut() {
                            r.swap(k, j);
                        }
                    }
                }
            }
            if (k + 1..rows).any(|i| m[i][k] != 0) {
                continue;
            }
            let p = m[k][k];
            match (k + 1..rows).find(|&i| (k + 1..cols).any(|j| m[i][j] % p != 0)) {
                Some(i) => {
                    for j in 0..cols {
                        m[k][j] += m[i][j];
                    }
                }
                None => break,
            }
        }
        out.push(m[k][k].abs());
        k += 1;
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = gcd of k×k minors`.
pub fn minor_invariant_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                g = gcd(g, det_laplace(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in with_last.iter_mut() {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

fn det_laplace(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_laplace(&minor)
        })
        .sum()
}

/// The generator classes expected for the canonical family, as
/// multiples of `[T_1]`, written out case by case.
pub fn expected_classes(n: i64, m: u64) -> Vec<i64> {
    (1..=m)
        .map(|i| {
            if n % 2 == 0 {
                i as i64
            } else if i % 2 == 0 {
                0
            } else {
                let k = (i - 1) / 2;
                (-1i64).pow(k as u32)
            }
        })
        .collect()
}

/// `T_i` straight from the defining formulas.
pub fn t_arc(n: i64, i: u64) -> (i64, i64) {
    let k = (i / 2) as i64;
    if i.is_multiple_of(2) {
        (1 - k * n, 2 + k * n)
    } else {
        (1 - k * n, 2 + (k + 1) * n)
    }
}
