//! Blade bookkeeping for the 16-dimensional exterior algebra of R^{1,3}.
//!
//! A blade is a wedge of distinct basis covectors e^0..e^3 in ascending
//! order, encoded as a 4-bit mask (bit mu set iff e^mu is a factor).
//! Mask 0 is the scalar blade 1; mask 15 is the volume form
//! e^0^e^1^e^2^e^3. All product signs are precomputed once into 16x16
//! tables; the `oracle` module re-derives them by term rewriting so the
//! tables never have to be trusted.

use std::sync::LazyLock;

/// Number of spacetime dimensions.
pub const DIM: usize = 4;
/// Number of basis blades.
pub const BLADE_COUNT: usize = 16;

/// Mask of the volume form blade.
pub const VOLUME_MASK: u8 = 0b1111;

/// Index of a basis blade: a 4-bit mask with ascending factor order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BladeIndex(u8);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);
    pub const VOLUME: BladeIndex = BladeIndex(VOLUME_MASK);

    pub fn from_mask(mask: u8) -> Option<BladeIndex> {
        (mask < 16).then_some(BladeIndex(mask))
    }

    /// Blade with the given strictly ascending factor indices.
    pub fn from_indices(indices: &[usize]) -> Option<BladeIndex> {
        let mut mask = 0u8;
        let mut last: Option<usize> = None;
        for &mu in indices {
            if mu >= DIM || last.is_some_and(|l| mu <= l) {
                return None;
            }
            mask |= 1 << mu;
            last = Some(mu);
        }
        Some(BladeIndex(mask))
    }

    /// The basis covector e^mu.
    pub fn covector(mu: usize) -> BladeIndex {
        assert!(mu < DIM);
        BladeIndex(1 << mu)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, mu: usize) -> bool {
        self.0 & (1 << mu) != 0
    }

    /// Factor indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..DIM).filter(|&mu| self.contains(mu)).collect()
    }

    pub fn all() -> impl Iterator<Item = BladeIndex> {
        (0u8..16).map(BladeIndex)
    }
}

/// Diagonal Minkowski metric entry g^{mu mu} = g_{mu mu}, signature (1,-1,-1,-1).
pub fn metric_sign(mu: usize) -> i8 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation sorting the concatenation of two ascending
/// factor lists: counts transpositions of each factor of `b` past the
/// larger factors of `a`.
fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut swaps = 0u32;
    for mu in 0..DIM {
        if b & (1 << mu) != 0 {
            swaps += (a >> (mu + 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Totally antisymmetric symbol with eps_{0123} = 1; zero on repeats.
pub fn eps4(idx: [usize; 4]) -> i8 {
    let mut seen = 0u8;
    for &i in &idx {
        if i >= DIM || seen & (1 << i) != 0 {
            return 0;
        }
        seen |= 1 << i;
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Precomputed structure constants of the algebra.
pub struct Tables {
    /// central[a][b]: sign of e^a e^b, result mask is a XOR b.
    pub central: [[i8; BLADE_COUNT]; BLADE_COUNT],
    /// wedge[a][b]: sign of e^a ^ e^b (0 when factors overlap), result mask a | b.
    pub wedge: [[i8; BLADE_COUNT]; BLADE_COUNT],
    /// hodge[a] = (complement mask, sign): star(e^a) = sign * e^complement.
    pub hodge: [(u8, i8); BLADE_COUNT],
    /// star_conj_grade_sign[k] = (-1)^{k(k-1)/2}.
    pub star_conj_grade_sign: [i8; DIM + 1],
}

fn build_tables() -> Tables {
    let mut central = [[0i8; BLADE_COUNT]; BLADE_COUNT];
    let mut wedge = [[0i8; BLADE_COUNT]; BLADE_COUNT];
    for a in 0..BLADE_COUNT as u8 {
        for b in 0..BLADE_COUNT as u8 {
            let mut sign = reorder_sign(a, b);
            // Each repeated factor contracts to its metric square.
            for mu in 0..DIM {
                if a & b & (1 << mu) != 0 {
                    sign *= metric_sign(mu);
                }
            }
            central[a as usize][b as usize] = sign;
            wedge[a as usize][b as usize] = if a & b != 0 { 0 } else { reorder_sign(a, b) };
        }
    }

    let mut hodge = [(0u8, 0i8); BLADE_COUNT];
    for a in 0..BLADE_COUNT as u8 {
        let comp = VOLUME_MASK & !a;
        // star(e^A) = (prod_{mu in A} g^{mu mu}) * eps_{[A asc][comp asc]} * e^comp
        let mut metric = 1i8;
        let mut perm = [0usize; 4];
        let mut n = 0;
        for mu in 0..DIM {
            if a & (1 << mu) != 0 {
                metric *= metric_sign(mu);
                perm[n] = mu;
                n += 1;
            }
        }
        for mu in 0..DIM {
            if comp & (1 << mu) != 0 {
                perm[n] = mu;
                n += 1;
            }
        }
        hodge[a as usize] = (comp, metric * eps4(perm));
    }

    let mut star_conj_grade_sign = [1i8; DIM + 1];
    for (k, s) in star_conj_grade_sign.iter_mut().enumerate() {
        if (k * (k.max(1) - 1) / 2) % 2 == 1 {
            *s = -1;
        }
    }

    Tables {
        central,
        wedge,
        hodge,
        star_conj_grade_sign,
    }
}

static TABLES: LazyLock<Tables> = LazyLock::new(build_tables);

pub fn tables() -> &'static Tables {
    &TABLES
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blade_from_indices_requires_ascending() {
        assert_eq!(BladeIndex::from_indices(&[0, 1]).unwrap().mask(), 0b0011);
        assert!(BladeIndex::from_indices(&[1, 0]).is_none());
        assert!(BladeIndex::from_indices(&[1, 1]).is_none());
        assert!(BladeIndex::from_indices(&[4]).is_none());
    }

    #[test]
    fn grades() {
        assert_eq!(BladeIndex::SCALAR.grade(), 0);
        assert_eq!(BladeIndex::VOLUME.grade(), 4);
        assert_eq!(BladeIndex::covector(2).grade(), 1);
    }

    #[test]
    fn eps_symbol() {
        assert_eq!(eps4([0, 1, 2, 3]), 1);
        assert_eq!(eps4([1, 0, 2, 3]), -1);
        assert_eq!(eps4([1, 2, 3, 0]), -1);
        assert_eq!(eps4([0, 0, 2, 3]), 0);
    }

    #[test]
    fn central_sign_basics() {
        let t = tables();
        // e^0 e^0 = g^{00} = 1, e^1 e^1 = -1
        assert_eq!(t.central[1][1], 1);
        assert_eq!(t.central[2][2], -1);
        // e^1 e^0 = -e^0^e^1
        assert_eq!(t.central[2][1], -1);
        assert_eq!(t.central[1][2], 1);
    }

    #[test]
    fn hodge_star_of_scalar_is_volume() {
        let t = tables();
        assert_eq!(t.hodge[0], (VOLUME_MASK, 1));
        // star(volume) = -1
        assert_eq!(t.hodge[VOLUME_MASK as usize], (0, -1));
    }
}
