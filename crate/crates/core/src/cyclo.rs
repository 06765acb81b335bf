//! Minimal cyclotomic sets of exponent tuples under multiplication by a base.

use serde::Serialize;

use crate::error::{Error, Result};

/// How one coordinate of an exponent tuple transforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axis {
    /// Exponents `0..M`, multiplied modulo `M`.
    Cyclic(u64),
    /// Exponents `0..=M`: zero is fixed and nonzero exponents orbit modulo
    /// `M` with representatives in `1..=M`.
    Affine(u64),
}

impl Axis {
    pub fn modulus(self) -> u64 {
        match self {
            Axis::Cyclic(m) | Axis::Affine(m) => m,
        }
    }

    /// Number of exponents on this axis.
    pub fn size(self) -> u64 {
        match self {
            Axis::Cyclic(m) => m,
            Axis::Affine(m) => m + 1,
        }
    }

    fn reduce(self, v: i128) -> u64 {
        let m = self.modulus() as i128;
        let r = v.rem_euclid(m) as u64;
        match self {
            Axis::Affine(m) if r == 0 => m,
            _ => r,
        }
    }

    /// Image of `x` under multiplication by `mult`.
    pub fn scale(self, x: u64, mult: i64) -> u64 {
        if x == 0 {
            return 0;
        }
        self.reduce(x as i128 * mult as i128)
    }

    /// Companion coordinate of `x` under `mult`: as [`Axis::scale`], except that
    /// zero on an affine axis pairs with the top exponent.
    pub fn companion(self, x: u64, mult: i64) -> u64 {
        match self {
            Axis::Affine(m) if x == 0 => m,
            _ => self.scale(x, mult),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicSet {
    pub axes: Vec<Axis>,
    pub base: u64,
    /// Sorted lexicographically; the first element is the representative.
    pub elements: Vec<Vec<u64>>,
}

impl CyclotomicSet {
    /// Orbit of `a` under repeated multiplication by `base`.
    pub fn orbit(axes: &[Axis], base: u64, a: &[u64]) -> Self {
        let mut elements = vec![a.to_vec()];
        loop {
            let next: Vec<u64> = elements
                .last()
                .unwrap()
                .iter()
                .zip(axes)
                .map(|(&x, ax)| ax.scale(x, base as i64))
                .collect();
            if next == elements[0] {
                break;
            }
            elements.push(next);
        }
        elements.sort();
        elements.dedup();
        CyclotomicSet { axes: axes.to_vec(), base, elements }
    }

    pub fn representative(&self) -> &[u64] {
        &self.elements[0]
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &[u64]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(a)).is_ok()
    }

    /// The minimal set containing the companion of the representative
    /// under `multiplier` (`-1` Euclidean, `-p^s` Hermitian).
    pub fn companion(&self, multiplier: i64) -> CyclotomicSet {
        let image: Vec<u64> = self
            .representative()
            .iter()
            .zip(&self.axes)
            .map(|(&x, ax)| ax.companion(x, multiplier))
            .collect();
        CyclotomicSet::orbit(&self.axes, self.base, &image)
    }
}

/// Partition of the whole exponent box into minimal cyclotomic sets.
#[derive(Clone, Debug)]
pub struct CyclotomicPartition {
    axes: Vec<Axis>,
    base: u64,
    sets: Vec<CyclotomicSet>,
    /// Mixed-radix index of a tuple to the position of its set.
    owner: Vec<usize>,
}

fn validate(axes: &[Axis], base: u64) -> Result<()> {
    if axes.is_empty() {
        return Err(Error::EmptyModuli);
    }
    if base < 2 {
        return Err(Error::ModulusMismatch(format!("base {base} must be at least 2")));
    }
    if let Some(ax) = axes.iter().find(|a| a.modulus() == 0) {
        return Err(Error::ModulusMismatch(format!("{ax:?} has modulus zero")));
    }
    Ok(())
}

impl CyclotomicPartition {
    pub fn new(axes: &[Axis], base: u64) -> Result<Self> {
        validate(axes, base)?;
        let total: u64 = axes.iter().map(|a| a.size()).product();
        let mut owner = vec![usize::MAX; total as usize];
        let mut sets = Vec::new();
        for idx in 0..total {
            if owner[idx as usize] != usize::MAX {
                continue;
            }
            let tuple = unrank(axes, idx);
            let set = CyclotomicSet::orbit(axes, base, &tuple);
            for el in &set.elements {
                owner[rank(axes, el) as usize] = sets.len();
            }
            sets.push(set);
        }
        // Tuples are visited in lexicographic order, so the first visit of each
        // orbit is its minimum and `sets` is already sorted by representative.
        Ok(CyclotomicPartition { axes: axes.to_vec(), base, sets, owner })
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn sets(&self) -> &[CyclotomicSet] {
        &self.sets
    }

    pub fn index_of(&self, a: &[u64]) -> Result<usize> {
        if a.len() != self.axes.len() || a.iter().zip(&self.axes).any(|(&x, ax)| x >= ax.size()) {
            return Err(Error::OutOfBox {
                tuple: a.to_vec(),
                bounds: self.axes.iter().map(|ax| ax.size() - 1).collect(),
            });
        }
        Ok(self.owner[rank(&self.axes, a) as usize])
    }

    pub fn set_containing(&self, a: &[u64]) -> Result<&CyclotomicSet> {
        Ok(&self.sets[self.index_of(a)?])
    }

    pub fn companion(&self, set: &CyclotomicSet, multiplier: i64) -> Result<&CyclotomicSet> {
        if set.axes != self.axes || set.base != self.base {
            return Err(Error::ModulusMismatch(format!(
                "set over {:?} base {} used with partition over {:?} base {}",
                set.axes, set.base, self.axes, self.base
            )));
        }
        let image: Vec<u64> = set
            .representative()
            .iter()
            .zip(&self.axes)
            .map(|(&x, ax)| ax.companion(x, multiplier))
            .collect();
        self.set_containing(&image)
    }

    pub fn ordered_representatives(&self) -> Vec<Vec<u64>> {
        self.sets.iter().map(|s| s.representative().to_vec()).collect()
    }

    /// Union of the sets meeting `tuples`, sorted.
    pub fn closure<'a>(&self, tuples: impl IntoIterator<Item = &'a Vec<u64>>) -> Result<Vec<Vec<u64>>> {
        let mut seen = vec![false; self.sets.len()];
        for t in tuples {
            seen[self.index_of(t)?] = true;
        }
        let mut out: Vec<Vec<u64>> = seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .flat_map(|(i, _)| self.sets[i].elements.iter().cloned())
            .collect();
        out.sort();
        Ok(out)
    }
}

pub fn minimal_sets(axes: &[Axis], base: u64) -> Result<Vec<CyclotomicSet>> {
    Ok(CyclotomicPartition::new(axes, base)?.sets)
}

/// Sorted representatives of the minimal sets modulo `modulus`.
pub fn ordered_representatives(modulus: u64, base: u64) -> Result<Vec<u64>> {
    let part = CyclotomicPartition::new(&[Axis::Cyclic(modulus)], base)?;
    Ok(part.sets.iter().map(|s| s.representative()[0]).collect())
}

fn rank(axes: &[Axis], a: &[u64]) -> u64 {
    a.iter().zip(axes).fold(0, |acc, (&x, ax)| acc * ax.size() + x)
}

fn unrank(axes: &[Axis], mut idx: u64) -> Vec<u64> {
    let mut out = vec![0; axes.len()];
    for (slot, ax) in out.iter_mut().zip(axes).rev() {
        *slot = idx % ax.size();
        idx /= ax.size();
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Multiplicative order of `base` modulo `m` (1 for `m = 1`).
pub fn multiplicative_order(base: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(base, m) != 1 {
        return None;
    }
    let mut x = base % m;
    let mut k = 1;
    while x != 1 {
        x = x * base % m;
        k += 1;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(m: u64, base: u64) -> CyclotomicPartition {
        CyclotomicPartition::new(&[Axis::Cyclic(m)], base).unwrap()
    }

    fn elems(s: &CyclotomicSet) -> Vec<u64> {
        s.elements.iter().map(|e| e[0]).collect()
    }

    #[test]
    fn modulus_80_base_9() {
        let p = uni(80, 9);
        for expected in [
            vec![1, 9],
            vec![2, 18],
            vec![8, 72],
            vec![10],
            vec![11, 19],
            vec![16, 64],
            vec![17, 73],
            vec![20],
        ] {
            assert_eq!(elems(p.set_containing(&[expected[0]]).unwrap()), expected);
        }
        let reps = ordered_representatives(80, 9).unwrap();
        assert_eq!(&reps[..18], &[0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17, 20]);
    }

    #[test]
    fn modulus_93_base_4() {
        let p = uni(93, 4);
        assert_eq!(elems(p.set_containing(&[1]).unwrap()), vec![1, 4, 16, 64, 70]);
        assert_eq!(elems(p.set_containing(&[2]).unwrap()), vec![2, 8, 32, 35, 47]);
        assert_eq!(elems(p.set_containing(&[3]).unwrap()), vec![3, 6, 12, 24, 48]);
    }

    #[test]
    fn modulus_one() {
        let sets = minimal_sets(&[Axis::Cyclic(1)], 7).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].elements, vec![vec![0]]);
        assert_eq!(ordered_representatives(1, 3).unwrap(), vec![0]);
    }

    #[test]
    fn empty_moduli_rejected() {
        assert_eq!(minimal_sets(&[], 3).unwrap_err(), Error::EmptyModuli);
    }

    #[test]
    fn companions() {
        let p = uni(80, 9);
        let zero = p.set_containing(&[0]).unwrap().clone();
        assert_eq!(zero.companion(-1).elements, vec![vec![0]]);
        let one = p.set_containing(&[1]).unwrap().clone();
        assert_eq!(elems(&one.companion(-1)), vec![71, 79]);
        assert_eq!(p.companion(&one, -1).unwrap(), &one.companion(-1));

        let p = uni(104, 25);
        let one = p.set_containing(&[1]).unwrap().clone();
        let c = p.companion(&one, -5).unwrap();
        assert!(c.contains(&[99]));
        assert_eq!(elems(c), vec![83, 99]);
    }

    #[test]
    fn singletons_mod_104_at_multiples_of_13() {
        let p = uni(104, 25);
        let singles: Vec<u64> = p
            .sets()
            .iter()
            .filter(|s| s.cardinality() == 1)
            .map(|s| s.representative()[0])
            .collect();
        assert_eq!(singles, (0..8).map(|i| 13 * i).collect::<Vec<_>>());
    }

    #[test]
    fn affine_axis_fixes_zero_and_normalizes_to_top() {
        let p = CyclotomicPartition::new(&[Axis::Affine(13), Axis::Affine(4)], 25).unwrap();
        let s = p.set_containing(&[1, 0]).unwrap();
        assert_eq!(s.elements, vec![vec![1, 0], vec![12, 0]]);
        assert_eq!(p.set_containing(&[0, 0]).unwrap().cardinality(), 1);
        assert_eq!(p.set_containing(&[13, 4]).unwrap().cardinality(), 1);
        assert_eq!(Axis::Affine(13).companion(0, -1), 13);
        assert_eq!(Axis::Affine(13).companion(13, -1), 13);
    }

    #[test]
    fn partition_covers_box_and_cardinality_divides_order() {
        let cases: Vec<(Vec<Axis>, u64)> = vec![
            (vec![Axis::Cyclic(80)], 9),
            (vec![Axis::Cyclic(48), Axis::Cyclic(3)], 7),
            (vec![Axis::Affine(15), Axis::Affine(3)], 4),
            (vec![Axis::Cyclic(2), Axis::Cyclic(6), Axis::Cyclic(6)], 7),
            (vec![Axis::Affine(255), Axis::Affine(1)], 16),
        ];
        for (axes, base) in cases {
            let p = CyclotomicPartition::new(&axes, base).unwrap();
            let total: usize = p.sets().iter().map(|s| s.cardinality()).sum();
            let size: u64 = axes.iter().map(|a| a.size()).product();
            assert_eq!(total as u64, size);
            for s in p.sets() {
                let rep = s.representative();
                assert!(s.elements.iter().all(|e| e.as_slice() >= rep));
                let l = rep
                    .iter()
                    .zip(&axes)
                    .filter(|(&x, _)| x != 0)
                    .fold(1, |acc, (_, ax)| lcm(acc, ax.modulus()));
                let ord = multiplicative_order(base, l).unwrap();
                assert_eq!(ord % s.cardinality() as u64, 0, "{rep:?}");
                for e in &s.elements {
                    let img: Vec<u64> = e.iter().zip(&axes).map(|(&x, a)| a.scale(x, base as i64)).collect();
                    assert!(s.contains(&img));
                }
            }
        }
    }
}
