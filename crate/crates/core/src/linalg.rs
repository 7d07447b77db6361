//! Small exact integer linear algebra: Bareiss elimination, ranks, null
//! vectors and lattice indices.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Determinant of a square matrix by fraction-free Bareiss elimination.
pub fn determinant(matrix: &[Vec<i128>]) -> Result<i128> {
    let n = matrix.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = sub(mul(a[i][j], a[k][k])?, mul(a[i][k], a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if a.is_empty() {
        return Ok(0);
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c], a[i][c]);
            let g = x.gcd(&y);
            let (fx, fy) = (y / g, x / g);
            for j in c..cols {
                a[i][j] = sub(mul(a[i][j], fy)?, mul(a[r][j], fx)?)?;
            }
            let g = a[i].iter().fold(0i128, |g, &v| g.gcd(&v));
            if g > 1 {
                a[i].iter_mut().for_each(|v| *v /= g);
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Ok(r)
}

/// Indices of a maximal affinely independent subset, chosen greedily in
/// input order. The first index is always 0.
pub fn affine_basis(points: &[Vec<i64>]) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Ok(Vec::new());
    }
    let origin = &points[0];
    let mut chosen = vec![0usize];
    let mut diffs: Vec<Vec<i64>> = Vec::new();
    for (k, p) in points.iter().enumerate().skip(1) {
        let diff: Vec<i64> = p.iter().zip(origin).map(|(a, b)| a - b).collect();
        diffs.push(diff);
        if rank(&diffs)? == diffs.len() {
            chosen.push(k);
            if chosen.len() == origin.len() + 1 {
                break;
            }
        } else {
            diffs.pop();
        }
    }
    Ok(chosen)
}

pub fn affine_dimension(points: &[Vec<i64>]) -> Result<usize> {
    Ok(affine_basis(points)?.len().saturating_sub(1))
}

/// A primitive generator of the null space of an `n x (n+1)` matrix of
/// full row rank, via signed maximal minors.
pub fn null_vector(rows: &[Vec<i128>]) -> Result<Vec<i128>> {
    let n = rows.len();
    let cols = n + 1;
    let mut out = Vec::with_capacity(cols);
    for skip in 0..cols {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let det = determinant(&minor)?;
        out.push(if skip % 2 == 0 { det } else { -det });
    }
    let g = out.iter().fold(0i128, |g, &v| g.gcd(&v));
    if g > 1 {
        out.iter_mut().for_each(|v| *v /= g);
    }
    Ok(out)
}

/// Index of the sublattice of `Z^dim` generated by `vectors`, or `None`
/// when the vectors do not span a full-rank sublattice.
pub fn lattice_index(vectors: &[Vec<i64>], dim: usize) -> Result<Option<u128>> {
    // Hermite-style reduction by repeated Euclid steps on columns.
    let mut rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let mut diag = Vec::with_capacity(dim);
    let mut start = 0;
    for c in 0..dim {
        loop {
            let nonzero: Vec<usize> = (start..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.is_empty() {
                return Ok(None);
            }
            let pivot = *nonzero
                .iter()
                .min_by_key(|&&i| rows[i][c].abs())
                .expect("nonempty");
            rows.swap(start, pivot);
            let mut done = true;
            for i in (start + 1)..rows.len() {
                if rows[i][c] != 0 {
                    let q = Integer::div_floor(&rows[i][c], &rows[start][c]);
                    for j in c..dim {
                        rows[i][j] = sub(rows[i][j], mul(q, rows[start][j])?)?;
                    }
                    if rows[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        diag.push(rows[start][c].unsigned_abs());
        start += 1;
    }
    Ok(Some(diag.into_iter().product()))
}


/// A basis of the integer null space `{x : rows * x = 0}` (primitive
/// vectors, one per free column of the reduced echelon form).
pub fn null_space_basis(rows: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    use num_rational::Ratio;
    type Q = Ratio<i128>;
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != Q::from_integer(0)) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c];
        a[r].iter_mut().for_each(|v| *v /= lead);
        for i in 0..a.len() {
            if i != r && a[i][c] != Q::from_integer(0) {
                let f = a[i][c];
                for j in 0..cols {
                    let t = a[r][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::from_integer(0); cols];
        v[free] = Q::from_integer(1);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free];
        }
        let lcm = v.iter().fold(1i128, |l, x| l.lcm(x.denom()));
        let ints: Vec<i128> = v.iter().map(|x| x.numer() * (lcm / x.denom())).collect();
        let g = ints.iter().fold(0i128, |g, &x| g.gcd(&x));
        let vec: Vec<i64> = ints
            .iter()
            .map(|&x| i64::try_from(x / g).map_err(|_| Error::Overflow))
            .collect::<Result<_>>()?;
        basis.push(vec);
    }
    Ok(basis)
}
