//! The shipped corpus: one representative of every isomorphism type of
//! order at most 24, and a family of larger groups up to order 200 built
//! from products, affine groups over small fields and cyclic extensions.

use crate::config::Config;
use crate::construct::{
    abelian, cyclic, dicyclic, dihedral, direct_product_with, make_standard, semidirect_product_with, ActionSpec,
    StandardKind,
};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// Caps used for corpus construction: semidirect products act on the
/// elements of the normal factor, so degrees exceed the default cap.
pub fn corpus_config() -> Config {
    Config { max_degree: 256, ..Config::default() }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// File-name-safe identifier, e.g. `o024_s4`.
    pub id: String,
    /// Conventional name, e.g. `S4`.
    pub name: String,
    pub group: Group,
}

impl CatalogEntry {
    pub fn soluble(&self) -> bool {
        self.group.is_soluble().unwrap_or(false)
    }

    pub fn tags(&self) -> Vec<&'static str> {
        let mut t = vec![if self.soluble() { "soluble" } else { "insoluble" }];
        if self.group.whole().map(|w| w.is_nilpotent()).unwrap_or(false) {
            t.push("nilpotent");
        }
        t
    }
}

fn entry(name: &str, expected: u64, group: Result<Group>) -> Result<CatalogEntry> {
    let group = group?;
    if group.order() != expected {
        return Err(Error::OrderMismatch { expected, actual: group.order() });
    }
    let slug: String = name
        .chars()
        .map(|c| match c {
            'a'..='z' | '0'..='9' => c,
            'A'..='Z' => c.to_ascii_lowercase(),
            _ => '_',
        })
        .collect();
    let mut slug = slug.split('_').filter(|s| !s.is_empty()).collect::<Vec<_>>().join("_");
    if slug.is_empty() {
        slug = "trivial".into();
    }
    Ok(CatalogEntry { id: format!("o{expected:03}_{slug}"), name: name.to_string(), group })
}

fn cfg() -> Config {
    corpus_config()
}

fn dp(a: Result<Group>, b: Result<Group>) -> Result<Group> {
    direct_product_with(&a?, &b?, cfg())
}

fn dp3(a: Result<Group>, b: Result<Group>, c: Result<Group>) -> Result<Group> {
    dp(dp(a, b), c)
}

fn sym(n: usize) -> Result<Group> {
    make_standard(StandardKind::Symmetric(n))
}

fn alt(n: usize) -> Result<Group> {
    make_standard(StandardKind::Alternating(n))
}

/// `C_n ⋊ C_m`, the generator of `C_m` acting as `a ↦ a^r`.
fn cyclic_ext(n: usize, m: usize, r: u64) -> Result<Group> {
    let cn = cyclic(n)?;
    let cm = cyclic(m)?;
    let a = cn.generators()[0].clone();
    semidirect_product_with(&cn, &cm, &ActionSpec { images: vec![vec![a.pow(r)]] }, cfg())
}

/// `N ⋊ H` with explicit generator images.
fn sd(n: Result<Group>, h: Result<Group>, images: impl Fn(&[Permutation]) -> Vec<Vec<Permutation>>) -> Result<Group> {
    let n = n?;
    let h = h?;
    let spec = ActionSpec { images: images(n.generators()) };
    semidirect_product_with(&n, &h, &spec, cfg())
}

type Matrix = Vec<Vec<u32>>;

fn mat_mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u32>() % p).collect()).collect()
}

fn mat_pow(a: &Matrix, k: u32, p: u32) -> Matrix {
    let n = a.len();
    let mut out: Matrix = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
    for _ in 0..k {
        out = mat_mul(&out, a, p);
    }
    out
}

/// Companion matrix of a primitive polynomial over `F_p` of degree `n`: its
/// multiplicative order is `p^n - 1`.
fn singer(p: u32, n: usize) -> Matrix {
    let target = p.pow(n as u32) - 1;
    let mut coeffs = vec![0u32; n];
    loop {
        let mut c: Matrix = vec![vec![0; n]; n];
        for i in 0..n - 1 {
            c[i][i + 1] = 1;
        }
        for j in 0..n {
            c[n - 1][j] = (p - coeffs[j] % p) % p;
        }
        if coeffs[0] != 0 {
            let ident = mat_pow(&c, 0, p);
            let mut m = c.clone();
            let mut k = 1;
            while m != ident && k <= target {
                m = mat_mul(&m, &c, p);
                k += 1;
            }
            if k == target {
                return c;
            }
        }
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// The Frobenius map `a ↦ a^p` of `F_{p^n}` in the basis `1, x, …, x^{n-1}`
/// where `c` is the companion matrix of multiplication by `x`.
fn frobenius(c: &Matrix, p: u32) -> Matrix {
    (0..c.len()).map(|i| mat_pow(c, i as u32 * p, p)[0].clone()).collect()
}

/// Points of `F_p^n` as row vectors, encoded in base `p`.
fn vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let size = p.pow(n as u32);
    (0..size).map(|mut x| (0..n).map(|_| { let d = x % p; x /= p; d }).collect()).collect()
}

fn encode(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn linear_perm(m: &Matrix, p: u32, n: usize) -> Permutation {
    let images = vectors(p, n)
        .iter()
        .map(|v| {
            let w: Vec<u32> = (0..n).map(|j| (0..n).map(|i| v[i] * m[i][j]).sum::<u32>() % p).collect();
            encode(&w, p)
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrix")
}

/// `F_p^n ⋊ ⟨mats⟩` acting on `F_p^n`; with `translations` false the linear
/// group alone.
fn affine(p: u32, n: usize, mats: &[Matrix], translations: bool) -> Result<Group> {
    let mut gens: Vec<Permutation> = mats.iter().map(|m| linear_perm(m, p, n)).collect();
    if translations {
        for i in 0..n {
            let images = vectors(p, n)
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w[i] = (w[i] + 1) % p;
                    encode(&w, p)
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
    }
    Group::with_config(p.pow(n as u32) as usize, &gens, cfg())
}

/// One representative of each of the 74 isomorphism types of order ≤ 24.
pub fn small_groups() -> Result<Vec<CatalogEntry>> {
    let q8 = || dicyclic(2);
    let d8 = || dihedral(4);
    let c = cyclic;
    let ab = |f: &[usize]| abelian(f);
    let list: Vec<Result<CatalogEntry>> = vec![
        entry("1", 1, c(1)),
        entry("C2", 2, c(2)),
        entry("C3", 3, c(3)),
        entry("C4", 4, c(4)),
        entry("C2xC2", 4, ab(&[2, 2])),
        entry("C5", 5, c(5)),
        entry("C6", 6, c(6)),
        entry("S3", 6, sym(3)),
        entry("C7", 7, c(7)),
        entry("C8", 8, c(8)),
        entry("C4xC2", 8, ab(&[4, 2])),
        entry("C2xC2xC2", 8, ab(&[2, 2, 2])),
        entry("D8", 8, d8()),
        entry("Q8", 8, q8()),
        entry("C9", 9, c(9)),
        entry("C3xC3", 9, ab(&[3, 3])),
        entry("C10", 10, c(10)),
        entry("D10", 10, dihedral(5)),
        entry("C11", 11, c(11)),
        entry("C12", 12, c(12)),
        entry("C6xC2", 12, ab(&[6, 2])),
        entry("D12", 12, dihedral(6)),
        entry("Dic3", 12, dicyclic(3)),
        entry("A4", 12, alt(4)),
        entry("C13", 13, c(13)),
        entry("C14", 14, c(14)),
        entry("D14", 14, dihedral(7)),
        entry("C15", 15, c(15)),
        entry("C16", 16, c(16)),
        entry("C8xC2", 16, ab(&[8, 2])),
        entry("C4xC4", 16, ab(&[4, 4])),
        entry("C4xC2xC2", 16, ab(&[4, 2, 2])),
        entry("C2^4", 16, ab(&[2, 2, 2, 2])),
        entry("C2xD8", 16, dp(c(2), d8())),
        entry("C2xQ8", 16, dp(c(2), q8())),
        entry("(C4xC2):C2", 16, sd(ab(&[4, 2]), c(2), |g| vec![vec![&g[0] * &g[1], g[1].clone()]])),
        entry("C4oD8", 16, sd(ab(&[4, 2]), c(2), |g| vec![vec![g[0].clone(), &g[0].pow(2) * &g[1]]])),
        entry("C4:C4", 16, cyclic_ext(4, 4, 3)),
        entry("M16", 16, cyclic_ext(8, 2, 5)),
        entry("SD16", 16, cyclic_ext(8, 2, 3)),
        entry("D16", 16, dihedral(8)),
        entry("Q16", 16, dicyclic(4)),
        entry("C17", 17, c(17)),
        entry("C18", 18, c(18)),
        entry("C6xC3", 18, ab(&[6, 3])),
        entry("D18", 18, dihedral(9)),
        entry("C3xS3", 18, dp(c(3), sym(3))),
        entry("(C3xC3):C2", 18, sd(ab(&[3, 3]), c(2), |g| vec![vec![g[0].pow(2), g[1].pow(2)]])),
        entry("C19", 19, c(19)),
        entry("C20", 20, c(20)),
        entry("C10xC2", 20, ab(&[10, 2])),
        entry("D20", 20, dihedral(10)),
        entry("Dic5", 20, dicyclic(5)),
        entry("F20", 20, cyclic_ext(5, 4, 2)),
        entry("C21", 21, c(21)),
        entry("C7:C3", 21, cyclic_ext(7, 3, 2)),
        entry("C22", 22, c(22)),
        entry("D22", 22, dihedral(11)),
        entry("C23", 23, c(23)),
        entry("C24", 24, c(24)),
        entry("C12xC2", 24, ab(&[12, 2])),
        entry("C6xC2xC2", 24, ab(&[6, 2, 2])),
        entry("S4", 24, sym(4)),
        entry("SL(2,3)", 24, sd(q8(), c(3), |g| vec![vec![g[1].clone(), &g[0] * &g[1]]])),
        entry("Dic6", 24, dicyclic(6)),
        entry("C3:C8", 24, cyclic_ext(3, 8, 2)),
        entry("C4xS3", 24, dp(c(4), sym(3))),
        entry("D24", 24, dihedral(12)),
        entry("C2xDic3", 24, dp(c(2), dicyclic(3))),
        entry("C3:D8", 24, sd(c(3), d8(), |g| vec![vec![g[0].pow(2)], vec![g[0].clone()]])),
        entry("C3xD8", 24, dp(c(3), d8())),
        entry("C3xQ8", 24, dp(c(3), q8())),
        entry("C2xA4", 24, dp(c(2), alt(4))),
        entry("C2xC2xS3", 24, dp(ab(&[2, 2]), sym(3))),
    ];
    list.into_iter().collect()
}

/// Larger groups up to order 200, soluble unless tagged otherwise.
pub fn family_groups() -> Result<Vec<CatalogEntry>> {
    let c = cyclic;
    let ab = |f: &[usize]| abelian(f);
    let q8 = || dicyclic(2);
    let d8 = || dihedral(4);
    let sl23 = || sd(q8(), c(3), |g| vec![vec![g[1].clone(), &g[0] * &g[1]]]);
    let s9 = singer(3, 2);
    let s8 = singer(2, 3);
    let s16 = singer(2, 4);
    let s25 = singer(5, 2);
    let frob8 = frobenius(&s8, 2);
    let frob9 = frobenius(&s9, 3);
    let i9: Matrix = vec![vec![0, 1], vec![2, 0]];
    let j9: Matrix = vec![vec![1, 1], vec![1, 2]];
    let refl: Matrix = vec![vec![1, 0], vec![0, 2]];
    let unip: Matrix = vec![vec![1, 1], vec![0, 1]];
    let list: Vec<Result<CatalogEntry>> = vec![
        entry("C5xC5", 25, ab(&[5, 5])),
        entry("C3^3", 27, ab(&[3, 3, 3])),
        entry("Heis3", 27, affine(3, 2, std::slice::from_ref(&unip), true)),
        entry("C2^5", 32, ab(&[2, 2, 2, 2, 2])),
        entry("D8xC2xC2", 32, dp(d8(), ab(&[2, 2]))),
        entry("Q8xC4", 32, dp(q8(), c(4))),
        entry("S3xS3", 36, dp(sym(3), sym(3))),
        entry("C3xA4", 36, dp(c(3), alt(4))),
        entry("C6xS3", 36, dp(c(6), sym(3))),
        entry("C3^2:C4", 36, affine(3, 2, std::slice::from_ref(&i9), true)),
        entry("C2^2:C9", 36, sd(ab(&[2, 2]), c(9), |g| vec![vec![g[1].clone(), &g[0] * &g[1]]])),
        entry("C13:C3", 39, cyclic_ext(13, 3, 3)),
        entry("C7:C6", 42, cyclic_ext(7, 6, 3)),
        entry("S4xC2", 48, dp(sym(4), c(2))),
        entry("SL(2,3)xC2", 48, dp(sl23(), c(2))),
        entry("GL(2,3)", 48, affine(3, 2, &[s9.clone(), refl.clone(), j9.clone()], false)),
        entry("S3xD8", 48, dp(sym(3), d8())),
        entry("S3xQ8", 48, dp(sym(3), q8())),
        entry("C2xC2xA4", 48, dp(ab(&[2, 2]), alt(4))),
        entry("C2^4:C3", 48, affine(2, 4, &[mat_pow(&s16, 5, 2)], true)),
        entry("C13:C4", 52, cyclic_ext(13, 4, 5)),
        entry("C11:C5", 55, cyclic_ext(11, 5, 3)),
        entry("C2^3:C7", 56, affine(2, 3, std::slice::from_ref(&s8), true)),
        entry("A5", 60, alt(5)),
        entry("D10xS3", 60, dp(dihedral(5), sym(3))),
        entry("F20xC3", 60, dp(cyclic_ext(5, 4, 2), c(3))),
        entry("C7:C9", 63, cyclic_ext(7, 9, 2)),
        entry("D8xD8", 64, dp(d8(), d8())),
        entry("S3wrC2", 72, {
            let base = dp(sym(3), sym(3));
            base.and_then(|b| {
                let mut gens = b.generators().to_vec();
                gens.push(Permutation::parse_cycles(6, "(0 3)(1 4)(2 5)")?);
                Group::with_config(6, &gens, cfg())
            })
        }),
        entry("S3xA4", 72, dp(sym(3), alt(4))),
        entry("C3xS4", 72, dp(c(3), sym(4))),
        entry("SL(2,3)xC3", 72, dp(sl23(), c(3))),
        entry("C3^2:C8", 72, affine(3, 2, std::slice::from_ref(&s9), true)),
        entry("C3^2:Q8", 72, affine(3, 2, &[i9.clone(), j9.clone()], true)),
        entry("C3^2:C4xC2", 72, dp(affine(3, 2, std::slice::from_ref(&i9), true), c(2))),
        entry("C5^2:C3", 75, affine(5, 2, &[mat_pow(&s25, 8, 5)], true)),
        entry("C13:C6", 78, cyclic_ext(13, 6, 4)),
        entry("C2^4:C5", 80, affine(2, 4, &[mat_pow(&s16, 3, 2)], true)),
        entry("S4xC2xC2", 96, dp3(sym(4), c(2), c(2))),
        entry("C5^2:C4", 100, affine(5, 2, &[mat_pow(&s25, 6, 5)], true)),
        entry("C11:C10", 110, cyclic_ext(11, 10, 2)),
        entry("S5", 120, sym(5)),
        entry("A5xC2", 120, dp(alt(5), c(2))),
        entry("S4xC5", 120, dp(sym(4), c(5))),
        entry("C7:C3xS3", 126, dp(cyclic_ext(7, 3, 2), sym(3))),
        entry("A4xA4", 144, dp(alt(4), alt(4))),
        entry("S4xS3", 144, dp(sym(4), sym(3))),
        entry("C3^2:SD16", 144, affine(3, 2, &[s9.clone(), frob9.clone()], true)),
        entry("C5^2:C6", 150, affine(5, 2, &[mat_pow(&s25, 4, 5)], true)),
        entry("C13:C12", 156, cyclic_ext(13, 12, 2)),
        entry("C2^3:(C7:C3)", 168, affine(2, 3, &[s8.clone(), frob8.clone()], true)),
        entry("C19:C9", 171, cyclic_ext(19, 9, 4)),
        entry("S3xS3xC5", 180, dp3(sym(3), sym(3), c(5))),
        entry("C5^2:C8", 200, affine(5, 2, &[mat_pow(&s25, 3, 5)], true)),
    ];
    list.into_iter().collect()
}

/// Both parts of the corpus, small groups first.
pub fn full_corpus() -> Result<Vec<CatalogEntry>> {
    let mut all = small_groups()?;
    all.extend(family_groups()?);
    Ok(all)
}
