//! Reduced simplicial homology over a prime field.

/// Arithmetic in F_p for prime `p`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p), "characteristic {p} is not prime");
        Fp { p }
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a dense matrix over F_p; rows may have any consistent length.
pub(crate) fn rank_mod_p(mut mat: Vec<Vec<u32>>, f: Fp) -> usize {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = f.inv(mat[rank][col]);
        for c in col..cols {
            mat[rank][c] = f.mul(mat[rank][c], inv);
        }
        for r in 0..rows {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in col..cols {
                    let sub = f.mul(factor, mat[rank][c]);
                    mat[r][c] = f.sub(mat[r][c], sub);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// `a - factor * b` for columns sorted by row index.
fn column_subtract(a: &[(usize, u32)], b: &[(usize, u32)], factor: u32, f: Fp) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, f.neg(f.mul(factor, b[j].1))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = f.sub(a[i].1, f.mul(factor, b[j].1));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(r, v) in &b[j..] {
        out.push((r, f.neg(f.mul(factor, v))));
    }
    out
}

/// Faces grouped by size: `levels[s]` lists the faces with `s` vertices,
/// each a bitmask; `levels[0]` is `[0]` (the empty face) whenever the
/// complex is nonvoid. Boundary columns have one entry per vertex of the
/// face, so ranks come from a sparse column elimination; pivot columns are
/// kept normalized with leading entry 1 and indexed by their leading row.
pub(crate) fn boundary_ranks(levels: &[Vec<u64>], f: Fp) -> Vec<usize> {
    use std::collections::HashMap;
    let mut ranks = vec![0usize; levels.len() + 1];
    for s in 1..levels.len() {
        if levels[s].is_empty() || levels[s - 1].is_empty() {
            continue;
        }
        let target: HashMap<u64, usize> = levels[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let mut basis: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
        for &face in &levels[s] {
            let mut col: Vec<(usize, u32)> = Vec::new();
            let mut pos = 0u32;
            let mut bits = face;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let sub = face & !(1u64 << v);
                // Subfaces of a face are faces, so the lookup always hits.
                let row = target[&sub];
                let coeff = if pos % 2 == 0 { 1 } else { f.neg(1) };
                col.push((row, coeff));
                pos += 1;
            }
            col.sort_unstable_by_key(|&(r, _)| r);
            while let Some(&(lead, val)) = col.first() {
                let Some(pivot) = basis.get(&lead) else {
                    break;
                };
                col = column_subtract(&col, pivot, val, f);
            }
            if let Some(&(lead, val)) = col.first() {
                let inv = f.inv(val);
                for entry in &mut col {
                    entry.1 = f.mul(entry.1, inv);
                }
                basis.insert(lead, col);
                ranks[s] += 1;
            }
        }
    }
    ranks
}

/// Reduced homology ranks from the level structure: index 0 holds the rank
/// in dimension -1, index k+1 the rank in dimension k.
pub(crate) fn homology_from_levels(levels: &[Vec<u64>], f: Fp) -> Vec<usize> {
    if levels.is_empty() {
        return Vec::new();
    }
    let ranks = boundary_ranks(levels, f);
    (0..levels.len())
        .map(|s| levels[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let f = Fp::new(32003);
        assert_eq!(f.mul(f.inv(12345), 12345), 1);
        assert_eq!(f.sub(0, 1), 32002);
        assert!(!is_prime(32001));
        assert!(is_prime(2));
    }

    #[test]
    fn matrix_ranks() {
        let f = Fp::new(2);
        assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, 1]], f), 1);
        assert_eq!(rank_mod_p(vec![vec![1, 0], vec![0, 1]], f), 2);
        assert_eq!(rank_mod_p(vec![vec![0, 0]], f), 0);
        // 2x2 determinant 2: invertible over F_32003, singular over F_2.
        let m = vec![vec![1, 1], vec![1, 32002]];
        assert_eq!(rank_mod_p(m.clone(), Fp::new(32003)), 2);
        let m2 = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(rank_mod_p(m2, Fp::new(2)), 1);
    }

    #[test]
    fn circle_homology() {
        // Hollow triangle: H~_0 = 0, H~_1 = 1.
        let levels = vec![
            vec![0u64],
            vec![0b001, 0b010, 0b100],
            vec![0b011, 0b101, 0b110],
        ];
        for p in [2, 3, 32003] {
            assert_eq!(homology_from_levels(&levels, Fp::new(p)), vec![0, 0, 1]);
        }
    }

    #[test]
    fn two_points_homology() {
        let levels = vec![vec![0u64], vec![0b01, 0b10]];
        assert_eq!(homology_from_levels(&levels, Fp::new(2)), vec![0, 1]);
    }

    #[test]
    fn solid_triangle_is_contractible() {
        let levels = vec![
            vec![0u64],
            vec![0b001, 0b010, 0b100],
            vec![0b011, 0b101, 0b110],
            vec![0b111],
        ];
        assert_eq!(
            homology_from_levels(&levels, Fp::new(32003)),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn empty_face_only() {
        let levels = vec![vec![0u64]];
        assert_eq!(homology_from_levels(&levels, Fp::new(2)), vec![1]);
    }
}
