//! Lattice point enumeration in dilates: depth-first over coordinates inside
//! the dilated bounding box, with each coordinate's range tightened by every
//! inequality against the best case of the coordinates not yet fixed.

use num_integer::Integer;

use super::LatticePolytope;

struct Row {
    normal: Vec<i64>,
    bound: i64,
    /// `suffix_min[j]` = least value of `Σ_{k >= j} normal[k] x_k` over the box.
    suffix_min: Vec<i64>,
}

pub(super) fn enumerate(
    p: &LatticePolytope,
    n: u32,
    strict: bool,
    visit: &mut dyn FnMut(&[i64]),
) {
    let m = p.ambient_dim;
    let n = n as i64;
    let lo: Vec<i64> = (0..m)
        .map(|j| n * p.vertices.iter().map(|v| v[j]).min().expect("nonempty"))
        .collect();
    let hi: Vec<i64> = (0..m)
        .map(|j| n * p.vertices.iter().map(|v| v[j]).max().expect("nonempty"))
        .collect();

    let mut rows: Vec<Row> = Vec::new();
    let mut push = |normal: Vec<i64>, bound: i64| {
        let mut suffix_min = vec![0i64; m + 1];
        for j in (0..m).rev() {
            let a = normal[j];
            suffix_min[j] = suffix_min[j + 1] + (a * lo[j]).min(a * hi[j]);
        }
        rows.push(Row {
            normal,
            bound,
            suffix_min,
        });
    };
    for f in &p.inequalities {
        push(f.normal.clone(), n * f.offset - i64::from(strict));
    }
    for e in &p.equations {
        push(e.normal.clone(), n * e.offset);
        push(e.normal.iter().map(|x| -x).collect(), -n * e.offset);
    }

    let mut x = vec![0i64; m];
    let mut partial = vec![0i64; rows.len()];
    descend(&rows, &lo, &hi, 0, &mut x, &mut partial, visit);
}

fn descend(
    rows: &[Row],
    lo: &[i64],
    hi: &[i64],
    j: usize,
    x: &mut Vec<i64>,
    partial: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]),
) {
    if j == x.len() {
        visit(x);
        return;
    }
    let (mut a, mut b) = (lo[j], hi[j]);
    for (r, row) in rows.iter().enumerate() {
        let c = row.normal[j];
        let rhs = row.bound - partial[r] - row.suffix_min[j + 1];
        if c > 0 {
            b = b.min(Integer::div_floor(&rhs, &c));
        } else if c < 0 {
            a = a.max(Integer::div_ceil(&(-rhs), &(-c)));
        } else if rhs < 0 {
            return;
        }
        if a > b {
            return;
        }
    }
    for v in a..=b {
        x[j] = v;
        for (r, row) in rows.iter().enumerate() {
            partial[r] += row.normal[j] * v;
        }
        descend(rows, lo, hi, j + 1, x, partial, visit);
        for (r, row) in rows.iter().enumerate() {
            partial[r] -= row.normal[j] * v;
        }
    }
}
