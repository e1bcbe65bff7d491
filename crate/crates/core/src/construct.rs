//! Group constructions: standard families, direct and semidirect products,
//! and regular representations.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// Families accepted by [`make_standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Cyclic(usize),
    ElementaryAbelian { p: usize, n: usize },
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
}

pub fn make_standard(kind: StandardKind) -> Result<Group> {
    make_standard_with(kind, Config::default())
}

pub fn make_standard_with(kind: StandardKind, config: Config) -> Result<Group> {
    match kind {
        StandardKind::Cyclic(m) => cyclic_with(m, config),
        StandardKind::ElementaryAbelian { p, n } => {
            if !crate::group::is_prime(p as u64) || n == 0 {
                return Err(Error::Construction(format!("E_{{{p}^{n}}} needs a prime and n >= 1")));
            }
            abelian_with(&vec![p; n], config)
        }
        StandardKind::Dihedral(n) => dihedral_with(n, config),
        StandardKind::Symmetric(n) => {
            let n = n.max(1);
            let mut gens = Vec::new();
            if n >= 2 {
                let cycle: Vec<u32> = (0..n as u32).collect();
                gens.push(Permutation::from_cycles(n, &[&cycle])?);
                gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
            }
            Group::with_config(n, &gens, config)
        }
        StandardKind::Alternating(n) => {
            let n = n.max(1);
            let mut gens = Vec::new();
            for i in 2..n as u32 {
                gens.push(Permutation::from_cycles(n, &[&[0, 1, i]])?);
            }
            Group::with_config(n, &gens, config)
        }
        StandardKind::Quaternion8 => dicyclic_with(2, config),
    }
}

pub fn cyclic(m: usize) -> Result<Group> {
    cyclic_with(m, Config::default())
}

fn cyclic_with(m: usize, config: Config) -> Result<Group> {
    if m == 0 {
        return Err(Error::Construction("cyclic group of order 0".into()));
    }
    if m == 1 {
        return Group::with_config(1, &[], config);
    }
    let cycle: Vec<u32> = (0..m as u32).collect();
    Group::with_config(m, &[Permutation::from_cycles(m, &[&cycle])?], config)
}

/// `C_{n₁} × C_{n₂} × …` on disjoint cycles.
pub fn abelian(factors: &[usize]) -> Result<Group> {
    abelian_with(factors, Config::default())
}

fn abelian_with(factors: &[usize], config: Config) -> Result<Group> {
    let degree: usize = factors.iter().sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for &m in factors {
        if m == 0 {
            return Err(Error::Construction("cyclic factor of order 0".into()));
        }
        if m > 1 {
            let cycle: Vec<u32> = (offset..offset + m as u32).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle])?);
        }
        offset += m as u32;
    }
    Group::with_config(degree, &gens, config)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> Result<Group> {
    dihedral_with(n, Config::default())
}

fn dihedral_with(n: usize, config: Config) -> Result<Group> {
    match n {
        0 => Err(Error::Construction("dihedral group of order 0".into())),
        1 => cyclic_with(2, config),
        2 => abelian_with(&[2, 2], config),
        _ => {
            let rot: Vec<u32> = (0..n as u32).collect();
            let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            Group::with_config(
                n,
                &[Permutation::from_cycles(n, &[&rot])?, Permutation::from_images(refl)?],
                config,
            )
        }
    }
}

/// Dicyclic group of order `4n` (`n = 2` is the quaternion group) in its
/// right regular representation.
pub fn dicyclic(n: usize) -> Result<Group> {
    dicyclic_with(n, Config::default())
}

fn dicyclic_with(n: usize, config: Config) -> Result<Group> {
    if n < 2 {
        return Err(Error::Construction("dicyclic groups need n >= 2".into()));
    }
    let m = 2 * n;
    // (i, j) stands for a^i x^j with a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}.
    let mul = |(i1, j1): (usize, usize), (i2, j2): (usize, usize)| -> (usize, usize) {
        if j1 == 0 {
            ((i1 + i2) % m, j2)
        } else {
            let i = (i1 + m - i2 + if j2 == 1 { n } else { 0 }) % m;
            (i, (1 + j2) % 2)
        }
    };
    let encode = |(i, j): (usize, usize)| j * m + i;
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
    regular_representation(elems.len(), |x, y| encode(mul(elems[x], elems[y])), &[encode((1, 0)), encode((0, 1))], config)
}

/// The right regular representation of a group given by its multiplication
/// on `0..n` and a list of generating elements.
pub fn regular_representation<F>(n: usize, mul: F, gens: &[usize], config: Config) -> Result<Group>
where
    F: Fn(usize, usize) -> usize,
{
    let perms = gens
        .iter()
        .map(|&g| Permutation::from_images((0..n).map(|x| mul(x, g) as u32).collect()))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::Construction("multiplication is not a group law".into()))?;
    let g = Group::with_config(n, &perms, config.internal())?;
    if g.order() != n as u64 {
        return Err(Error::Construction(format!("generators span {} of {} elements", g.order(), n)));
    }
    Ok(g)
}

/// `A × B` acting on the disjoint union of the point sets.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    direct_product_with(a, b, *a.config())
}

pub fn direct_product_with(a: &Group, b: &Group, config: Config) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens: Vec<Permutation> = a.generators().iter().map(|g| g.extend_to(degree)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), degree)));
    Group::with_config(degree, &gens, config)
}

/// Direct product of several factors, left to right.
pub fn direct_product_all(factors: &[Group]) -> Result<Group> {
    let mut it = factors.iter();
    let first = it.next().ok_or_else(|| Error::Construction("empty product".into()))?.clone();
    it.try_fold(first, |acc, f| direct_product(&acc, f))
}

/// How the complement acts on the normal factor: `images[h][i]` is the
/// image of the `i`-th generator of `N` under the `h`-th generator of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpec {
    pub images: Vec<Vec<Permutation>>,
}

/// `N ⋊ H` acting on the elements of `N` (by right multiplication and the
/// automorphisms) together with the points of `H`.
pub fn semidirect_product(n: &Group, h: &Group, action: &ActionSpec) -> Result<Group> {
    semidirect_product_with(n, h, action, *n.config())
}

pub fn semidirect_product_with(n: &Group, h: &Group, action: &ActionSpec, config: Config) -> Result<Group> {
    if action.images.len() != h.generators().len() {
        return Err(Error::InvalidAction(format!(
            "{} generator images given for {} complement generators",
            action.images.len(),
            h.generators().len()
        )));
    }
    let elems = n.elements()?;
    let size = elems.len();
    let index = |p: &Permutation| elems.binary_search(p).ok();
    let ngens = n.generators();
    let gen_idx: Vec<usize> = ngens.iter().map(|g| index(g).expect("generator is a member")).collect();
    let mul = |a: usize, b: usize| index(&(&elems[a] * &elems[b])).expect("closed under products");
    let identity = index(&Permutation::identity(n.degree())).expect("identity is a member");

    let degree = size + h.degree();
    let mut gens = Vec::new();
    for &g in &gen_idx {
        let mut images: Vec<u32> = (0..size).map(|x| mul(x, g) as u32).collect();
        images.extend((size..degree).map(|p| p as u32));
        gens.push(Permutation::from_images_unchecked(images));
    }
    for (hg, imgs) in h.generators().iter().zip(&action.images) {
        if imgs.len() != ngens.len() {
            return Err(Error::InvalidAction("one image per normal-factor generator is required".into()));
        }
        let img_idx = imgs
            .iter()
            .map(|p| index(p).ok_or_else(|| Error::InvalidAction(format!("image {p} is not in the normal factor"))))
            .collect::<Result<Vec<_>>>()?;
        let phi = extend_to_automorphism(size, identity, &gen_idx, &img_idx, mul)?;
        let mut images: Vec<u32> = phi.iter().map(|&x| x as u32).collect();
        images.extend(hg.images().iter().map(|&p| p + size as u32));
        gens.push(Permutation::from_images_unchecked(images));
    }
    let g = Group::with_config(degree, &gens, config)?;
    if g.order() != n.order() * h.order() {
        return Err(Error::InvalidAction(format!(
            "the maps do not define a homomorphism from the complement: order {} instead of {}",
            g.order(),
            n.order() * h.order()
        )));
    }
    Ok(g)
}

/// Extends generator images to a map on all elements and checks that it is
/// a bijective homomorphism.
fn extend_to_automorphism<F>(size: usize, identity: usize, gens: &[usize], images: &[usize], mul: F) -> Result<Vec<usize>>
where
    F: Fn(usize, usize) -> usize,
{
    let mut phi = vec![usize::MAX; size];
    phi[identity] = identity;
    let mut queue = vec![identity];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (&g, &img) in gens.iter().zip(images) {
            let y = mul(x, g);
            let fy = mul(phi[x], img);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                queue.push(y);
            } else if phi[y] != fy {
                return Err(Error::InvalidAction("generator images do not extend to a homomorphism".into()));
            }
        }
        k += 1;
    }
    let mut seen = vec![false; size];
    for &y in &phi {
        if y == usize::MAX || std::mem::replace(&mut seen[y], true) {
            return Err(Error::InvalidAction("map is not bijective".into()));
        }
    }
    Ok(phi)
}
