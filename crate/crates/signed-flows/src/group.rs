//! Exact arithmetic in finite abelian groups given as products of cyclic
//! groups `Z_{n_1} x ... x Z_{n_r}`.
//!
//! The presentation is not required to be canonical: `[2, 3]` and `[6]`
//! describe isomorphic groups and must produce identical counts everywhere
//! downstream, since all counting results depend only on the order `k` and
//! on `epsilon` (the number of even factors). Elements are compared by
//! residue vector within one fixed presentation.

use crate::error::{Error, Result};
use std::fmt;

/// Largest number of cyclic factors in a presentation.
pub const MAX_FACTORS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<u16>,
}

/// An element as a residue vector, one residue per cyclic factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    len: u8,
    residues: [u16; MAX_FACTORS],
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.residues().iter()).finish()
    }
}

impl GroupElement {
    pub fn residues(&self) -> &[u16] {
        &self.residues[..self.len as usize]
    }
}

impl AbelianGroup {
    /// Build `Z_{n_1} x ... x Z_{n_r}`. Every order must be at least 1.
    pub fn new(cyclic_orders: &[u64]) -> Result<AbelianGroup> {
        if cyclic_orders.is_empty() {
            return Err(Error::InvalidGroup("at least one cyclic order is required".into()));
        }
        if cyclic_orders.len() > MAX_FACTORS {
            return Err(Error::InvalidGroup(format!(
                "at most {MAX_FACTORS} cyclic factors are supported"
            )));
        }
        let mut orders = Vec::with_capacity(cyclic_orders.len());
        for &n in cyclic_orders {
            if n == 0 {
                return Err(Error::InvalidGroup("cyclic order 0 is not a group".into()));
            }
            if n > u16::MAX as u64 {
                return Err(Error::InvalidGroup(format!("cyclic order {n} is too large")));
            }
            orders.push(n as u16);
        }
        let mut order: u64 = 1;
        for &n in &orders {
            order = order
                .checked_mul(n as u64)
                .ok_or_else(|| Error::InvalidGroup("group order overflows u64".into()))?;
        }
        Ok(AbelianGroup { orders })
    }

    /// Parse a comma-separated list of cyclic orders, e.g. `"2,4"`.
    pub fn parse(spec: &str) -> Result<AbelianGroup> {
        let orders: Vec<u64> = spec
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidGroup(format!("cannot parse cyclic order '{t}'")))
            })
            .collect::<Result<_>>()?;
        AbelianGroup::new(&orders)
    }

    pub fn cyclic_orders(&self) -> Vec<u64> {
        self.orders.iter().map(|&n| n as u64).collect()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    /// Number of even cyclic factors; equals the largest `d` with a
    /// subgroup isomorphic to `Z_2^d`.
    pub fn epsilon(&self) -> u32 {
        self.orders.iter().filter(|&&n| n % 2 == 0).count() as u32
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { len: self.orders.len() as u8, residues: [0; MAX_FACTORS] }
    }

    /// Element from residues, reduced modulo the factor orders.
    pub fn element(&self, residues: &[u64]) -> Result<GroupElement> {
        if residues.len() != self.orders.len() {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.zero();
        for (i, (&r, &n)) in residues.iter().zip(&self.orders).enumerate() {
            out.residues[i] = (r % n as u64) as u16;
        }
        Ok(out)
    }

    /// Shorthand for elements of a one-factor group.
    pub fn of(&self, r: u64) -> GroupElement {
        assert_eq!(self.orders.len(), 1, "AbelianGroup::of needs a cyclic group");
        self.element(&[r]).unwrap()
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if g.len as usize != self.orders.len() {
            return Err(Error::GroupMismatch);
        }
        for (r, &n) in g.residues().iter().zip(&self.orders) {
            if *r >= n {
                return Err(Error::GroupMismatch);
            }
        }
        Ok(())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.check(g).is_ok()
    }

    pub fn try_add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    /// Componentwise sum. Panics when an element is foreign to this group;
    /// use [`AbelianGroup::try_add`] for a checked variant.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut out = *a;
        for (i, &n) in self.orders.iter().enumerate() {
            let s = out.residues[i] as u32 + b.residues[i] as u32;
            let n = n as u32;
            out.residues[i] = (if s >= n { s - n } else { s }) as u16;
        }
        out
    }

    pub fn try_neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.neg(a))
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a));
        let mut out = *a;
        for (i, &n) in self.orders.iter().enumerate() {
            if out.residues[i] != 0 {
                out.residues[i] = n - out.residues[i];
            }
        }
        out
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Integer multiple: `g` added to itself `c` times, negated for `c < 0`.
    pub fn scale(&self, c: i64, g: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(g));
        let mut out = *g;
        for (i, &n) in self.orders.iter().enumerate() {
            let n = n as i64;
            let r = (g.residues[i] as i64 * (c % n)).rem_euclid(n);
            out.residues[i] = r as u16;
        }
        out
    }

    pub fn is_zero(&self, g: &GroupElement) -> bool {
        g.residues().iter().all(|&r| r == 0)
    }

    /// Whether `2g = 0`.
    pub fn is_involution(&self, g: &GroupElement) -> bool {
        self.is_zero(&self.scale(2, g))
    }

    /// The set `Gamma_2 = { g : 2g = 0 }`, of size `2^epsilon`, in index
    /// order.
    pub fn involution_set(&self) -> Vec<GroupElement> {
        let mut out = vec![self.zero()];
        for (i, &n) in self.orders.iter().enumerate() {
            if n % 2 == 0 {
                let half = n / 2;
                let mut doubled = Vec::with_capacity(out.len() * 2);
                for g in &out {
                    doubled.push(*g);
                    let mut h = *g;
                    h.residues[i] = half;
                    doubled.push(h);
                }
                out = doubled;
            }
        }
        out.sort_by_key(|g| self.index_of(g));
        out
    }

    /// All solutions of `2x = 2g`, namely `{ g + t : t in Gamma_2 }`.
    pub fn double_solutions(&self, g: &GroupElement) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> =
            self.involution_set().iter().map(|t| self.add(g, t)).collect();
        out.sort_by_key(|x| self.index_of(x));
        out
    }

    /// Mixed-radix rank of an element; inverse of [`AbelianGroup::element_at`].
    pub fn index_of(&self, g: &GroupElement) -> u64 {
        debug_assert!(self.contains(g));
        let mut idx = 0u64;
        for (r, &n) in g.residues().iter().zip(&self.orders) {
            idx = idx * n as u64 + *r as u64;
        }
        idx
    }

    pub fn element_at(&self, mut idx: u64) -> GroupElement {
        debug_assert!(idx < self.order());
        let mut out = self.zero();
        for i in (0..self.orders.len()).rev() {
            let n = self.orders[i] as u64;
            out.residues[i] = (idx % n) as u16;
            idx /= n;
        }
        out
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_groups() -> Vec<AbelianGroup> {
        let presentations: &[&[u64]] = &[
            &[1],
            &[2],
            &[3],
            &[4],
            &[2, 2],
            &[5],
            &[6],
            &[2, 3],
            &[7],
            &[8],
            &[2, 4],
            &[2, 2, 2],
            &[9],
            &[3, 3],
            &[10],
            &[12],
            &[2, 6],
            &[2, 2, 3],
            &[16],
            &[2, 8],
            &[4, 4],
            &[2, 2, 4],
            &[2, 2, 2, 2],
        ];
        presentations.iter().map(|p| AbelianGroup::new(p).unwrap()).collect()
    }

    #[test]
    fn construction() {
        assert_eq!(AbelianGroup::new(&[6]).unwrap().order(), 6);
        assert_eq!(AbelianGroup::new(&[2, 4]).unwrap().order(), 8);
        assert_eq!(AbelianGroup::new(&[1]).unwrap().order(), 1);
        assert!(AbelianGroup::new(&[0]).is_err());
        assert!(AbelianGroup::new(&[]).is_err());
        assert!(AbelianGroup::new(&[2; 9]).is_err());
    }

    #[test]
    fn parse_spec() {
        let g = AbelianGroup::parse("2,4").unwrap();
        assert_eq!(g.cyclic_orders(), vec![2, 4]);
        assert!(AbelianGroup::parse("2,x").is_err());
        assert!(AbelianGroup::parse("").is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.add(&z6.of(4), &z6.of(5)), z6.of(3));
        let z2z4 = AbelianGroup::new(&[2, 4]).unwrap();
        let g = z2z4.element(&[1, 3]).unwrap();
        assert_eq!(z2z4.scale(2, &g), z2z4.element(&[0, 2]).unwrap());
        assert_eq!(z2z4.scale(0, &g), z2z4.zero());
        assert_eq!(z2z4.scale(-1, &g), z2z4.neg(&g));
    }

    #[test]
    fn mismatched_groups_error() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        let z2z4 = AbelianGroup::new(&[2, 4]).unwrap();
        assert_eq!(z6.try_add(&z6.of(1), &z2z4.zero()), Err(Error::GroupMismatch));
        // same shape, residue out of range for the smaller group
        let z3 = AbelianGroup::new(&[3]).unwrap();
        assert_eq!(z3.try_add(&z3.of(1), &z6.of(4)), Err(Error::GroupMismatch));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(AbelianGroup::new(&[3]).unwrap().epsilon(), 0);
        assert_eq!(AbelianGroup::new(&[6]).unwrap().epsilon(), 1);
        assert_eq!(AbelianGroup::new(&[2, 4]).unwrap().epsilon(), 2);
    }

    #[test]
    fn involution_set_examples() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.involution_set(), vec![z6.of(0), z6.of(3)]);
        let z5 = AbelianGroup::new(&[5]).unwrap();
        assert_eq!(z5.involution_set(), vec![z5.zero()]);
        let z2z4 = AbelianGroup::new(&[2, 4]).unwrap();
        let got = z2z4.involution_set();
        let want: Vec<GroupElement> = [[0, 0], [0, 2], [1, 0], [1, 2]]
            .iter()
            .map(|r| z2z4.element(&[r[0], r[1]]).unwrap())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn double_solutions_examples() {
        let z6 = AbelianGroup::new(&[6]).unwrap();
        assert_eq!(z6.double_solutions(&z6.of(2)), vec![z6.of(2), z6.of(5)]);
        let z5 = AbelianGroup::new(&[5]).unwrap();
        assert_eq!(z5.double_solutions(&z5.of(3)), vec![z5.of(3)]);
        let z2z2 = AbelianGroup::new(&[2, 2]).unwrap();
        assert_eq!(z2z2.double_solutions(&z2z2.element(&[1, 0]).unwrap()).len(), 4);
    }

    #[test]
    fn involution_count_matches_epsilon() {
        for g in small_groups() {
            assert_eq!(g.involution_set().len() as u64, 1 << g.epsilon(), "{:?}", g.cyclic_orders());
            for t in g.involution_set() {
                assert!(g.is_involution(&t));
            }
        }
    }

    #[test]
    fn double_solutions_property_exhaustive() {
        // for |G| <= 16: double_solutions(g) == { x : 2x = 2g } by brute force
        for grp in small_groups() {
            for g in grp.elements() {
                let want: Vec<GroupElement> = grp
                    .elements()
                    .filter(|x| grp.scale(2, x) == grp.scale(2, &g))
                    .collect();
                assert_eq!(grp.double_solutions(&g), want);
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive() {
        for grp in small_groups() {
            let elems: Vec<GroupElement> = grp.elements().collect();
            assert_eq!(elems.len() as u64, grp.order());
            for a in &elems {
                assert_eq!(grp.add(a, &grp.zero()), *a);
                assert_eq!(grp.add(a, &grp.neg(a)), grp.zero());
                for b in &elems {
                    assert_eq!(grp.add(a, b), grp.add(b, a));
                    for c in &elems {
                        assert_eq!(grp.add(&grp.add(a, b), c), grp.add(a, &grp.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn scale_matches_repeated_addition() {
        for grp in small_groups() {
            for g in grp.elements() {
                let mut acc = grp.zero();
                for c in 0..2 * grp.order() as i64 {
                    assert_eq!(grp.scale(c, &g), acc);
                    assert_eq!(grp.scale(-c, &g), grp.neg(&acc));
                    acc = grp.add(&acc, &g);
                }
            }
        }
    }

    #[test]
    fn index_round_trip() {
        for grp in small_groups() {
            for (i, g) in grp.elements().enumerate() {
                assert_eq!(grp.index_of(&g), i as u64);
                assert_eq!(grp.element_at(i as u64), g);
            }
        }
    }
}
