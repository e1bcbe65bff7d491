//! Element table of a small group: canonical element indexing, the full
//! multiplication table, inverses and element orders.
//!
//! Elements are sorted lexicographically by image list, so index 0 is the
//! identity and indexing is determined by the element set alone.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::perm::Permutation;

pub type Elem = u32;
pub type ElemSet = FixedBitSet;

pub(crate) const IDENTITY: Elem = 0;

pub(crate) struct Table {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, Elem>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u32>,
    gens: Vec<Elem>,
}

impl Table {
    pub fn build(mut elements: Vec<Permutation>, generators: &[Permutation]) -> Table {
        elements.sort();
        let n = elements.len();
        assert!(n <= u16::MAX as usize + 1, "element table limited to 65536 elements");
        let index: HashMap<Permutation, Elem> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let mut gens: Vec<Elem> = generators.iter().map(|g| index[g]).filter(|&g| g != IDENTITY).collect();
        gens.dedup();

        // Right multiplication by each generator, then a spanning tree of the
        // Cayley graph: b = parent[b] * gens[via[b]].
        let right: Vec<Vec<u16>> = gens
            .iter()
            .map(|&s| {
                let sp = &elements[s as usize];
                elements.iter().map(|e| index[&(e * sp)] as u16).collect()
            })
            .collect();
        let mut parent = vec![u16::MAX; n];
        let mut via = vec![u16::MAX; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        visited[0] = true;
        order.push(0usize);
        let mut i = 0;
        while i < order.len() {
            let b = order[i];
            for (k, r) in right.iter().enumerate() {
                let c = r[b] as usize;
                if !visited[c] {
                    visited[c] = true;
                    parent[c] = b as u16;
                    via[c] = k as u16;
                    order.push(c);
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), n);

        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let row = a * n;
            mul[row] = a as u16;
            for &b in &order[1..] {
                let p = parent[b] as usize;
                let k = via[b] as usize;
                mul[row + b] = right[k][mul[row + p] as usize];
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&x| x == 0).unwrap() as u16;
        }
        let mut orders = vec![1u32; n];
        for a in 1..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        Table { n, elements, index, mul, inv, orders, gens }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, e: Elem) -> &Permutation {
        &self.elements[e as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.index.get(p).copied()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.n + b as usize] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a as usize] as Elem
    }

    #[inline]
    pub fn order_of(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        let mut x = IDENTITY;
        for _ in 0..(k % self.orders[a as usize]) {
            x = self.mul(x, a);
        }
        x
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.n)
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn trivial_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert(0);
        s
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> ElemSet {
        let mut set = self.trivial_set();
        let mut list = vec![IDENTITY];
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != IDENTITY).collect();
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.put(y as usize) {
                    list.push(y);
                }
            }
            i += 1;
        }
        set
    }

    /// Normal closure of `seed` under conjugation by `ambient_gens`, returned
    /// with a generating list.
    pub fn normal_closure(&self, ambient_gens: &[Elem], seed: &[Elem]) -> (ElemSet, Vec<Elem>) {
        let mut gens: Vec<Elem> = seed.iter().copied().filter(|&g| g != IDENTITY).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut set = self.closure(&gens);
        loop {
            let mut added = false;
            let current = gens.clone();
            for &x in &current {
                for &a in ambient_gens {
                    let c = self.conj(x, a);
                    if !set.contains(c as usize) {
                        gens.push(c);
                        set = self.closure(&gens);
                        added = true;
                    }
                }
            }
            if !added {
                return (set, gens);
            }
        }
    }

    pub fn conjugate_set(&self, set: &ElemSet, g: Elem) -> ElemSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            out.insert(self.conj(x as Elem, g) as usize);
        }
        out
    }

    /// True if conjugation by every element of `by` maps the subgroup
    /// generated by `gens` (with element set `set`) into itself.
    pub fn normalized_by(&self, set: &ElemSet, gens: &[Elem], by: &[Elem]) -> bool {
        by.iter().all(|&g| gens.iter().all(|&x| set.contains(self.conj(x, g) as usize)))
    }

    /// A short generating list for the subgroup with element set `set`,
    /// preferring elements of large order.
    pub fn generating_set(&self, set: &ElemSet) -> Vec<Elem> {
        let mut candidates: Vec<Elem> = set.ones().map(|x| x as Elem).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.order_of(x)), x));
        let target = set.count_ones(..);
        let mut gens = Vec::new();
        let mut current = self.trivial_set();
        for x in candidates {
            if current.count_ones(..) == target {
                break;
            }
            if !current.contains(x as usize) {
                gens.push(x);
                current = self.closure(&gens);
            }
        }
        gens
    }
}

/// Lexicographic comparison of two sets by their sorted element lists.
pub(crate) fn canonical_cmp(a: &ElemSet, b: &ElemSet) -> std::cmp::Ordering {
    a.ones().cmp(b.ones())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_table() -> Table {
        let gens = vec![
            Permutation::parse_cycles(3, "(0 1 2)").unwrap(),
            Permutation::parse_cycles(3, "(0 1)").unwrap(),
        ];
        let mut elements = Vec::new();
        for a in 0..3u32 {
            for b in 0..3u32 {
                for c in 0..3u32 {
                    if let Ok(p) = Permutation::from_images(vec![a, b, c]) {
                        elements.push(p);
                    }
                }
            }
        }
        Table::build(elements, &gens)
    }

    #[test]
    fn table_agrees_with_composition() {
        let t = s3_table();
        assert_eq!(t.len(), 6);
        assert!(t.element(IDENTITY).is_identity());
        for a in 0..6 {
            for b in 0..6 {
                let prod = t.element(a) * t.element(b);
                assert_eq!(t.index_of(&prod), Some(t.mul(a, b)));
            }
            assert_eq!(t.mul(a, t.inv(a)), IDENTITY);
            assert_eq!(t.order_of(a) as u64, t.element(a).order());
        }
    }

    #[test]
    fn closure_and_normal_closure() {
        let t = s3_table();
        let transposition = t.index_of(&Permutation::parse_cycles(3, "(0 1)").unwrap()).unwrap();
        assert_eq!(t.closure(&[transposition]).count_ones(..), 2);
        let (nc, _) = t.normal_closure(t.generators(), &[transposition]);
        assert_eq!(nc.count_ones(..), 6);
        let rotation = t.index_of(&Permutation::parse_cycles(3, "(0 1 2)").unwrap()).unwrap();
        let (nc, _) = t.normal_closure(t.generators(), &[rotation]);
        assert_eq!(nc.count_ones(..), 3);
    }
}
