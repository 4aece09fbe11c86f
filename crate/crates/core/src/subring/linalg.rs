//! Row reduction and subspace enumeration over a prime field GF(p).

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// A subspace kept as a reduced row echelon basis, rows ordered by pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Echelon {
    pub p: u64,
    pub width: usize,
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u64, width: usize) -> Echelon {
        Echelon {
            p,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by(p: u64, width: usize, vs: &[Vec<u64>]) -> Echelon {
        let mut e = Echelon::new(p, width);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut r = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = r[c];
            if f != 0 {
                for (x, y) in r.iter_mut().zip(row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` on `rows`, if it lies in the span.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.contains(v).then(|| self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Adds `v`; false when it was already in the span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let p = self.p;
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(r[c], p);
        for x in r.iter_mut() {
            *x = *x * s % p;
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, r);
        true
    }
}

/// Every subspace of GF(p)^q, each as its reduced row echelon basis, in
/// order of dimension, then pivot set, then free entries.
pub(crate) fn all_subspaces(p: u64, q: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for k in 0..=q {
        for pivots in combinations(q, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..q).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let total = (p as usize).pow(free.len() as u32);
            for mut code in 0..total {
                let mut rows = vec![vec![0u64; q]; k];
                for (r, &c) in pivots.iter().enumerate() {
                    rows[r][c] = 1;
                }
                for &(r, c) in &free {
                    rows[r][c] = (code % p as usize) as u64;
                    code /= p as usize;
                }
                out.push(rows);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_are_gaussian_binomial_sums() {
        // Σ_k [q choose k]_p
        assert_eq!(all_subspaces(2, 1).len(), 2);
        assert_eq!(all_subspaces(2, 2).len(), 5);
        assert_eq!(all_subspaces(2, 3).len(), 16);
        assert_eq!(all_subspaces(2, 4).len(), 67);
        assert_eq!(all_subspaces(3, 2).len(), 6);
    }

    #[test]
    fn echelon_membership_and_coords() {
        let e = Echelon::spanned_by(3, 3, &[vec![1, 2, 0], vec![0, 1, 1]]);
        assert_eq!(e.dim(), 2);
        let v = vec![2, 0, 2];
        assert!(e.contains(&v));
        let c = e.coords(&v).unwrap();
        let back: Vec<u64> = (0..3)
            .map(|j| (c[0] * e.rows[0][j] + c[1] * e.rows[1][j]) % 3)
            .collect();
        assert_eq!(back, v);
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(inv(2, 5), 3);
    }
}
