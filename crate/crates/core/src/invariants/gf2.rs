//! Rank over GF(2) with rows packed into machine words.

/// Rank of the matrix whose rows are the given bitmasks.
pub fn rank<I: IntoIterator<Item = u32>>(rows: I) -> u32 {
    // Basis vectors have distinct leading bits, so `min(x, x ^ b)` clears
    // the leading bit of `b` from `x` exactly when it is set.
    let mut basis = [0u32; 32];
    let mut len = 0;
    for row in rows {
        let mut x = row;
        for &b in &basis[..len] {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis[len] = x;
            len += 1;
            basis[..len].sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    len as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic() {
        assert_eq!(rank([]), 0);
        assert_eq!(rank([0, 0]), 0);
        assert_eq!(rank([0b1, 0b10, 0b11]), 2);
        assert_eq!(rank([0b110, 0b011, 0b101]), 2);
        assert_eq!(rank([0b100, 0b010, 0b001]), 3);
    }

    #[test]
    fn matches_dense_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let rows: Vec<u32> = (0..rng.random_range(0..10))
                .map(|_| rng.random_range(0..256))
                .collect();
            assert_eq!(rank(rows.iter().copied()), dense_rank(&rows, 8));
        }
    }

    fn dense_rank(rows: &[u32], width: usize) -> u32 {
        let mut m: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| (0..width).map(|j| ((r >> j) & 1) as u8).collect())
            .collect();
        let mut rank = 0;
        for col in 0..width {
            let Some(p) = (rank..m.len()).find(|&i| m[i][col] == 1) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && m[i][col] == 1 {
                    let pivot = m[rank].clone();
                    for (a, b) in m[i].iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank as u32
    }
}
