use super::coeff::Coeff;

/// Row echelon form over the rationals; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (e, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *e = &*e - &(&f * p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coeff {
        Coeff::from_int(n)
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![c(1), c(2)], vec![c(2), c(4)]]), 1);
        assert_eq!(rank(&[vec![c(1), c(0)], vec![c(0), c(3)]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![c(0), c(0)]]), 0);
    }
}
