//! Independent brute-force oracles on Cayley tables. Nothing here calls into
//! the library's group machinery: elements are closed under composition by
//! hand, subgroups are sorted index lists, residuals come from commutator
//! calculus.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

pub type Set = Vec<usize>;

/// `(a * b)[i] = b[a[i]]`: apply `a` first.
pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn parse(degree: usize, text: &str) -> Vec<u32> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for cycle in text.split(')').map(|c| c.trim().trim_start_matches('(')).filter(|c| !c.trim().is_empty()) {
        let pts: Vec<u32> = cycle.split_whitespace().map(|x| x.parse().unwrap()).collect();
        for (k, &p) in pts.iter().enumerate() {
            images[p as usize] = pts[(k + 1) % pts.len()];
        }
    }
    images
}

/// Number of elements generated by `gens`, by breadth-first closure.
pub fn closure_order(degree: usize, gens: &[Vec<u32>]) -> usize {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.len()
}

pub struct Cayley {
    pub elems: Vec<Vec<u32>>,
    pub index: HashMap<Vec<u32>, usize>,
    mul: Vec<u32>,
    inv: Vec<usize>,
    pub identity: usize,
}

impl Cayley {
    /// Closes `gens` under composition.
    pub fn generate(degree: usize, gens: &[Vec<u32>]) -> Cayley {
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut elems = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut k = 0;
        while k < elems.len() {
            for g in gens {
                let y = compose(&elems[k], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
            k += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&compose(&elems[i], &elems[j])] as u32;
            }
        }
        let inv = (0..n).map(|i| (0..n).find(|&j| mul[i * n + j] == 0).unwrap()).collect();
        Cayley { elems, index, mul, inv, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn idx(&self, p: &[u32]) -> usize {
        self.index[p]
    }

    pub fn all(&self) -> Set {
        (0..self.order()).collect()
    }

    fn close_from(&self, start: Vec<bool>, gens: &[usize]) -> Set {
        let mut member = start;
        member[self.identity] = true;
        let mut list: Vec<usize> = (0..self.order()).filter(|&i| member[i]).collect();
        let mut k = 0;
        while k < list.len() {
            for &g in gens {
                let y = self.m(list[k], g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        list
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Set {
        self.close_from(vec![false; self.order()], gens)
    }

    /// A short generating list for the subgroup `h`.
    pub fn generators_of(&self, h: &Set) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for &x in h {
            if !Self::contains(&span, x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// The subgroup generated by `h` (with generators `h_gens`) and `x`.
    pub fn extend(&self, h: &Set, h_gens: &[usize], x: usize) -> Set {
        let mut start = vec![false; self.order()];
        for &y in h {
            start[y] = true;
        }
        let mut gens = h_gens.to_vec();
        gens.push(x);
        self.close_from(start, &gens)
    }

    pub fn contains(h: &Set, x: usize) -> bool {
        h.binary_search(&x).is_ok()
    }

    pub fn subset(a: &Set, b: &Set) -> bool {
        a.iter().all(|&x| Self::contains(b, x))
    }

    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.m(self.m(self.inv(g), x), g)
    }

    pub fn is_normal_in(&self, k: &Set, l: &Set) -> bool {
        l.iter().all(|&g| k.iter().all(|&x| Self::contains(k, self.conj(x, g))))
    }

    /// `[a, b]`, generated by all commutators.
    pub fn commutator(&self, a: &Set, b: &Set) -> Set {
        let mut seen = vec![false; self.order()];
        let mut gens = Vec::new();
        for &x in a {
            for &y in b {
                let c = self.m(self.m(self.inv(x), self.inv(y)), self.m(x, y));
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.closure(&gens)
    }

    pub fn derived(&self, h: &Set) -> Set {
        self.commutator(h, h)
    }

    /// Last term of the lower central series.
    pub fn nilpotent_residual(&self, h: &Set) -> Set {
        let mut cur = h.clone();
        loop {
            let next = self.commutator(&cur, h);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Every subgroup containing `h` (inclusive).
    pub fn overgroups(&self, h: &Set) -> Vec<Set> {
        let mut seen: BTreeSet<Set> = BTreeSet::new();
        seen.insert(h.clone());
        let mut queue = vec![(h.clone(), self.generators_of(h))];
        let mut k = 0;
        while k < queue.len() {
            let (cur, gens) = queue[k].clone();
            for x in 0..self.order() {
                if !Self::contains(&cur, x) {
                    let next = self.extend(&cur, &gens, x);
                    if seen.insert(next.clone()) {
                        let mut next_gens = gens.clone();
                        next_gens.push(x);
                        queue.push((next, next_gens));
                    }
                }
            }
            k += 1;
        }
        seen.into_iter().collect()
    }

    pub fn all_subgroups(&self) -> Vec<Set> {
        self.overgroups(&vec![self.identity])
    }

    /// Subgroups of `l` (taken from `pool`) normal in `l`.
    pub fn normal_in<'a>(&self, l: &Set, pool: &'a [Set]) -> Vec<&'a Set> {
        pool.iter().filter(|k| Self::subset(k, l) && self.is_normal_in(k, l)).collect()
    }

    /// Supersoluble residual of `l` by searching normal series of prime
    /// steps downward from `l`. `pool` must contain every subgroup of `l`.
    pub fn supersoluble_residual(&self, l: &Set, pool: &[Set]) -> Set {
        let normals = self.normal_in(l, pool);
        let mut reached: Vec<Set> = vec![l.clone()];
        let mut k = 0;
        while k < reached.len() {
            let m = reached[k].clone();
            for n in &normals {
                if n.len() < m.len() && m.len().is_multiple_of(n.len()) && is_prime(m.len() / n.len()) && Self::subset(n, &m) && !reached.contains(n) {
                    reached.push((*n).clone());
                }
            }
            k += 1;
        }
        reached.into_iter().min_by_key(|s| s.len()).unwrap()
    }

    /// The 𝔉-residual of `l` for `f` in A, N, NA, U (U needs `pool`).
    pub fn residual(&self, f: &str, l: &Set, pool: Option<&[Set]>) -> Set {
        match f {
            "A" => self.derived(l),
            "N" => self.nilpotent_residual(l),
            "NA" => self.nilpotent_residual(&self.derived(l)),
            "U" => self.supersoluble_residual(l, pool.expect("U needs the subgroup pool")),
            _ => panic!("no oracle for {f}"),
        }
    }

    /// Maximal-chain search: `h = H_0 <· H_1 <· … <· H_n = top` with each
    /// `H_i^𝔉 ≤ H_{i-1}`.
    pub fn f_subnormal(&self, f: &str, top: &Set, h: &Set, pool: Option<&[Set]>) -> bool {
        let overs: Vec<Set> = self.overgroups(h).into_iter().filter(|s| Self::subset(s, top)).collect();
        let mut memo: HashMap<Set, bool> = HashMap::new();
        self.sn_rec(f, top, h, &overs, pool, &mut memo)
    }

    fn sn_rec(&self, f: &str, l: &Set, h: &Set, overs: &[Set], pool: Option<&[Set]>, memo: &mut HashMap<Set, bool>) -> bool {
        if l == h {
            return true;
        }
        if let Some(&v) = memo.get(l) {
            return v;
        }
        let res = self.residual(f, l, pool);
        let mut ok = false;
        for k in maximal_among(l, overs) {
            if Self::subset(&res, k) && self.sn_rec(f, k, h, overs, pool, memo) {
                ok = true;
                break;
            }
        }
        memo.insert(l.clone(), ok);
        ok
    }

    /// For every `h ≤ K <· L ≤ top`: `L/K_L ∉ 𝔉`, i.e. `L^𝔉 ≰ K`.
    pub fn f_abnormal(&self, f: &str, top: &Set, h: &Set, pool: Option<&[Set]>) -> bool {
        let overs: Vec<Set> = self.overgroups(h).into_iter().filter(|s| Self::subset(s, top)).collect();
        for l in &overs {
            let res = self.residual(f, l, pool);
            for k in maximal_among(l, &overs) {
                if Self::subset(&res, k) {
                    return false;
                }
            }
        }
        true
    }

    pub fn normalizer(&self, top: &Set, h: &Set) -> Set {
        let mut out: Vec<usize> =
            top.iter().copied().filter(|&g| h.iter().all(|&x| Self::contains(h, self.conj(x, g)))).collect();
        out.sort_unstable();
        out
    }
}

/// Members of `pool` maximal in `l`.
pub fn maximal_among<'a>(l: &Set, pool: &'a [Set]) -> Vec<&'a Set> {
    let below: Vec<&Set> = pool.iter().filter(|k| k.len() < l.len() && Cayley::subset(k, l)).collect();
    below
        .iter()
        .copied()
        .filter(|k| !below.iter().any(|m| m.len() > k.len() && Cayley::subset(k, m)))
        .collect()
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Cayley table of a library group, built from its generators only.
pub fn cayley_of(g: &formgroups::Group) -> Cayley {
    let gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
    Cayley::generate(g.degree(), &gens)
}

/// Oracle index set of a library subgroup.
pub fn set_of(c: &Cayley, h: &formgroups::Subgroup) -> Set {
    let mut s: Vec<usize> = h.elements().iter().map(|p| c.idx(p.images())).collect();
    s.sort_unstable();
    s
}
