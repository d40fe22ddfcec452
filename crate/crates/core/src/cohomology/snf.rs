//! Smith normal form over the integers with exact, overflow-checked arithmetic.

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i128>>;

/// `p * a * q = d` with `d` diagonal, `d[i] | d[i+1]`, all non-negative.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<i128>,
    pub rank: usize,
    /// Present when requested.
    pub p: Option<Matrix>,
    pub q: Option<Matrix>,
    pub q_inv: Option<Matrix>,
}

fn overflow() -> Error {
    Error::ResourceLimit {
        what: "integer overflow in normal form",
        bound: i128::MAX as usize,
    }
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

struct Work {
    a: Matrix,
    p: Option<Matrix>,
    q: Option<Matrix>,
    q_inv: Option<Matrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(p) = &mut self.p {
            p.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.a {
            r.swap(i, j);
        }
        if let Some(q) = &mut self.q {
            for r in q {
                r.swap(i, j);
            }
        }
        if let Some(qi) = &mut self.q_inv {
            qi.swap(i, j);
        }
    }

    /// row_j -= k * row_i
    fn row_op(&mut self, j: usize, i: usize, k: i128) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        fn apply(m: &mut Matrix, j: usize, i: usize, k: i128) -> Result<()> {
            for c in 0..m[i].len() {
                let v = m[i][c];
                if v != 0 {
                    m[j][c] = m[j][c]
                        .checked_sub(v.checked_mul(k).ok_or_else(overflow)?)
                        .ok_or_else(overflow)?;
                }
            }
            Ok(())
        }
        apply(&mut self.a, j, i, k)?;
        if let Some(p) = &mut self.p {
            apply(p, j, i, k)?;
        }
        Ok(())
    }

    /// col_j -= k * col_i
    fn col_op(&mut self, j: usize, i: usize, k: i128) -> Result<()> {
        if k == 0 {
            return Ok(());
        }
        fn apply(m: &mut Matrix, j: usize, i: usize, k: i128) -> Result<()> {
            for r in m.iter_mut() {
                let v = r[i];
                if v != 0 {
                    r[j] = r[j].checked_sub(v.checked_mul(k).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
            Ok(())
        }
        apply(&mut self.a, j, i, k)?;
        if let Some(q) = &mut self.q {
            apply(q, j, i, k)?;
        }
        // Q' = Q E with E = I - k e_i e_j^T, so Q'^-1 = (I + k e_i e_j^T) Q^-1: row_i += k row_j
        if let Some(qi) = &mut self.q_inv {
            for c in 0..qi[j].len() {
                let v = qi[j][c];
                if v != 0 {
                    qi[i][c] = qi[i][c].checked_add(v.checked_mul(k).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
        }
        Ok(())
    }
}

pub fn smith(a: &Matrix, cols: usize, track: bool) -> Result<Smith> {
    let rows = a.len();
    let mut w = Work {
        a: a.clone(),
        p: track.then(|| identity(rows)),
        q: track.then(|| identity(cols)),
        q_inv: track.then(|| identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest non-zero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = w.a[i][j];
                if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                    if v.abs() == 1 {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| w.a[bi][bj].abs() == 1) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[i][t] != 0 {
                    let k = w.a[i][t].div_euclid(w.a[t][t]);
                    w.row_op(i, t, k)?;
                    if w.a[i][t] != 0 {
                        clean = false;
                        w.swap_rows(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                if w.a[t][j] != 0 {
                    let k = w.a[t][j].div_euclid(w.a[t][t]);
                    w.col_op(j, t, k)?;
                    if w.a[t][j] != 0 {
                        clean = false;
                        w.swap_cols(t, j);
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let d = w.a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[i][j] % d != 0));
            match bad {
                Some(i) => w.row_op(t, i, -1)?,
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            for c in 0..cols {
                w.a[t][c] = -w.a[t][c];
            }
            if let Some(p) = &mut w.p {
                for c in 0..rows {
                    p[t][c] = -p[t][c];
                }
            }
        }
        t += 1;
    }
    let diagonal: Vec<i128> = (0..rows.min(cols)).map(|i| w.a[i][i]).collect();
    let rank = diagonal.iter().take_while(|&&d| d != 0).count();
    Ok(Smith {
        diagonal,
        rank,
        p: w.p,
        q: w.q,
        q_inv: w.q_inv,
    })
}

pub fn mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Result<Matrix> {
    let mut out = vec![vec![0i128; cols]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            let v = row[k];
            if v == 0 {
                continue;
            }
            for j in 0..cols {
                let x = b[k][j];
                if x != 0 {
                    out[i][j] = out[i][j].checked_add(v.checked_mul(x).ok_or_else(overflow)?).ok_or_else(overflow)?;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &Matrix, cols: usize) -> Smith {
        let s = smith(a, cols, true).unwrap();
        let rows = a.len();
        let pa = mul(s.p.as_ref().unwrap(), a, rows, cols).unwrap();
        let paq = mul(&pa, s.q.as_ref().unwrap(), cols, cols).unwrap();
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(paq[i][j], want);
            }
        }
        let qq = mul(s.q.as_ref().unwrap(), s.q_inv.as_ref().unwrap(), cols, cols).unwrap();
        assert_eq!(qq, identity(cols));
        for w in s.diagonal[..s.rank].windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        s
    }

    #[test]
    fn known_forms() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(check(&a, 3).diagonal, vec![2, 6, 12]);
        let b = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(check(&b, 2).diagonal, vec![1, 6]);
        let z = vec![vec![0, 0, 0]];
        assert_eq!(check(&z, 3).rank, 0);
    }

    proptest! {
        #[test]
        fn random_matrices(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-6i128..7, 16)) {
            let a: Matrix = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            check(&a, cols);
        }
    }
}
