//! Matrix shapes: full, upper triangular, and triangular with tied diagonal
//! entries or constant superdiagonals.

/// Named member of the shape family; determines the DSL spelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeName {
    Full,
    Upper,
    ScalarDiagonal,
    Band,
    S3,
    S4,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixShape {
    pub n: usize,
    pub upper: bool,
    /// Block label of each diagonal position; equal labels force equal entries.
    pub blocks: Vec<usize>,
    /// Forces a_{ij} = a_{(i+1)(j+1)}.
    pub band: bool,
    pub name: ShapeName,
}

impl MatrixShape {
    /// M_n.
    pub fn full(n: usize) -> MatrixShape {
        MatrixShape {
            n,
            upper: false,
            blocks: (0..n).collect(),
            band: false,
            name: ShapeName::Full,
        }
    }

    /// T_n.
    pub fn upper(n: usize) -> MatrixShape {
        MatrixShape {
            n,
            upper: true,
            blocks: (0..n).collect(),
            band: false,
            name: ShapeName::Upper,
        }
    }

    /// D_n: upper triangular with a constant diagonal.
    pub fn scalar_diagonal(n: usize) -> MatrixShape {
        MatrixShape {
            n,
            upper: true,
            blocks: vec![0; n],
            band: false,
            name: ShapeName::ScalarDiagonal,
        }
    }

    /// V_n: D_n with every superdiagonal constant.
    pub fn band(n: usize) -> MatrixShape {
        MatrixShape {
            n,
            upper: true,
            blocks: vec![0; n],
            band: true,
            name: ShapeName::Band,
        }
    }

    /// 3×3 upper triangular with a₁₁ = a₂₂.
    pub fn s3() -> MatrixShape {
        MatrixShape {
            n: 3,
            upper: true,
            blocks: vec![0, 0, 1],
            band: false,
            name: ShapeName::S3,
        }
    }

    /// 4×4 upper triangular with a₁₁ = a₂₂ and a₃₃ = a₄₄.
    pub fn s4() -> MatrixShape {
        MatrixShape {
            n: 4,
            upper: true,
            blocks: vec![0, 0, 1, 1],
            band: false,
            name: ShapeName::S4,
        }
    }

    /// Whether position (i, j) (0-based) may hold a nonzero entry.
    pub fn allows(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && (!self.upper || i <= j)
    }

    /// Free parameters: each slot lists the positions that share one entry.
    /// Slots are ordered by their first position in row-major order.
    pub fn slots(&self) -> Vec<Vec<(usize, usize)>> {
        let mut slots: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut owner = vec![vec![usize::MAX; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.allows(i, j) {
                    continue;
                }
                let tied = if self.band {
                    (i > 0 && j > 0).then(|| (i - 1, j - 1))
                } else if i == j {
                    (0..i).find(|&k| self.blocks[k] == self.blocks[i]).map(|k| (k, k))
                } else {
                    None
                };
                match tied {
                    Some((a, b)) => {
                        let s = owner[a][b];
                        owner[i][j] = s;
                        slots[s].push((i, j));
                    }
                    None => {
                        owner[i][j] = slots.len();
                        slots.push(vec![(i, j)]);
                    }
                }
            }
        }
        slots
    }

    /// Whether `self` imposes at least the constraints of `other` (so every
    /// `self` matrix is an `other` matrix).
    pub fn refines(&self, other: &MatrixShape) -> bool {
        let own = self.slots();
        self.n == other.n
            && (self.upper || !other.upper)
            && other.slots().iter().all(|slot| {
                let (i, j) = slot[0];
                !self.allows(i, j)
                    || slot.iter().all(|&(a, b)| {
                        own.iter()
                            .any(|s| s.contains(&(i, j)) && s.contains(&(a, b)))
                    })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_counts() {
        assert_eq!(MatrixShape::full(2).slots().len(), 4);
        assert_eq!(MatrixShape::upper(3).slots().len(), 6);
        assert_eq!(MatrixShape::scalar_diagonal(5).slots().len(), 11);
        assert_eq!(MatrixShape::band(3).slots().len(), 3);
        assert_eq!(MatrixShape::s3().slots().len(), 5);
        assert_eq!(MatrixShape::s4().slots().len(), 8);
    }

    #[test]
    fn first_slot_is_the_top_left_entry() {
        let s = MatrixShape::scalar_diagonal(3).slots();
        assert_eq!(s[0], vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(s[1], vec![(0, 1)]);
    }

    #[test]
    fn refinement_chain() {
        let d3 = MatrixShape::scalar_diagonal(3);
        let s3 = MatrixShape::s3();
        let t3 = MatrixShape::upper(3);
        assert!(d3.refines(&s3) && s3.refines(&t3) && d3.refines(&t3));
        assert!(!t3.refines(&s3) && !s3.refines(&d3));
        assert!(MatrixShape::band(4).refines(&MatrixShape::scalar_diagonal(4)));
        assert!(MatrixShape::s4().refines(&MatrixShape::upper(4)));
        assert!(MatrixShape::scalar_diagonal(4).refines(&MatrixShape::s4()));
    }
}
