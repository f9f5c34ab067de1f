//! Constructors for the standard families: cyclic, dihedral, symmetric,
//! alternating, generalised quaternion, extraspecial, 2x2 linear groups over
//! small fields, affine Frobenius groups, and direct and central products.
//!
//! Generator conventions:
//! - `dihedral(2n)`, `n >= 3`: rotation `(1 2 ... n)` and the reflection fixing 1.
//! - `symmetric(n)`: `(1 2)` and `(1 2 ... n)`; `alternating(n)`: `(1 2 k)`, `3 <= k <= n`.
//! - `quaternion_generalised(4m)`: element `i + 2m*j` is `a^i b^j` with
//!   `a^(2m) = 1`, `b^2 = a^m`, `b a b^-1 = a^-1`.
//! - `gl2`/`sl2` act on the nonzero vectors of `GF(q)^2`; `psl2`/`pgl2` act on
//!   the `q + 1` points of the projective line (point `q` is infinity).

use std::fmt;
use std::str::FromStr;

use crate::error::{GroupError, Result};
use crate::field::{FieldElement, GaloisField, Matrix2};
use crate::group::{gcd, prime_power, ElemId, FiniteGroup, Permutation, Subgroup, DENSE_TABLE_LIMIT};

const MAX_SYMMETRIC_DEGREE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plus,
    Minus,
}

impl FromStr for Variant {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Self::Plus),
            "minus" | "-" => Ok(Self::Minus),
            other => Err(GroupError::InvalidParameter(format!(
                "variant must be plus or minus, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plus => "plus",
            Self::Minus => "minus",
        })
    }
}

fn table_group(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    if order > DENSE_TABLE_LIMIT {
        return Err(GroupError::CapExceeded {
            what: "table construction",
            size: order,
            cap: DENSE_TABLE_LIMIT,
        });
    }
    let mut t = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            t.push(mul(a, b) as u16);
        }
    }
    Ok(FiniteGroup::from_trusted_table(order, t))
}

fn cycle(degree: usize, pts: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[pts.into_iter().collect()])
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic order must be positive".into()));
    }
    if n <= DENSE_TABLE_LIMIT {
        table_group(n, |a, b| (a + b) % n)
    } else {
        FiniteGroup::from_permutations(n, &[cycle(n, 1..=n)?])
    }
}

/// Dihedral group of the given order (`2n`).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(GroupError::InvalidParameter(format!(
            "dihedral order must be even and at least 2, got {order}"
        )));
    }
    let n = order / 2;
    if n < 3 {
        // r^i s^j with s r s = r^-1
        return table_group(order, |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let e = if j == 0 { i + k } else { i + n - k };
            (e % n) + n * ((j + l) % 2)
        });
    }
    let rotation = cycle(n, 1..=n)?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    FiniteGroup::from_permutations(n, &[rotation, reflection])
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    if n < 2 {
        return FiniteGroup::from_permutations(1, &[]);
    }
    FiniteGroup::from_permutations(n, &[cycle(n, [1, 2])?, cycle(n, 1..=n)?])
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    check_degree(n)?;
    if n < 3 {
        return FiniteGroup::from_permutations(n.max(1), &[]);
    }
    let gens = (3..=n).map(|k| cycle(n, [1, 2, k])).collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(n, &gens)
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_SYMMETRIC_DEGREE {
        return Err(GroupError::CapExceeded {
            what: "symmetric/alternating degree",
            size: n,
            cap: MAX_SYMMETRIC_DEGREE,
        });
    }
    Ok(())
}

/// Generalised quaternion (dicyclic) group of order `4m`.
pub fn quaternion_generalised(order: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(4) {
        return Err(GroupError::InvalidParameter(format!(
            "quaternion order must be a positive multiple of 4, got {order}"
        )));
    }
    let m = order / 4;
    let n = 2 * m;
    table_group(order, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        let e = if j == 0 { i + k } else { i + n - k };
        if j == 1 && l == 1 {
            (e + m) % n
        } else {
            (e % n) + n * (j + l)
        }
    })
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    if m * n <= DENSE_TABLE_LIMIT {
        // (a, b) has id a * |H| + b
        return table_group(m * n, |x, y| {
            let a = g.mul((x / n) as ElemId, (y / n) as ElemId) as usize;
            let b = h.mul((x % n) as ElemId, (y % n) as ElemId) as usize;
            a * n + b
        });
    }
    match (g.permutation_generators(), h.permutation_generators()) {
        (Some((dg, gg)), Some((dh, hg))) => {
            let degree = dg + dh;
            let mut gens = Vec::new();
            for p in gg {
                let mut im: Vec<usize> = p.images().iter().map(|&i| i as usize).collect();
                im.extend(dg..degree);
                gens.push(Permutation::from_images(im)?);
            }
            for p in hg {
                let mut im: Vec<usize> = (0..dg).collect();
                im.extend(p.images().iter().map(|&i| i as usize + dg));
                gens.push(Permutation::from_images(im)?);
            }
            FiniteGroup::from_permutations(degree, &gens)
        }
        _ => Err(GroupError::CapExceeded {
            what: "direct product of table groups",
            size: m * n,
            cap: DENSE_TABLE_LIMIT,
        }),
    }
}

/// `(G x H) / {(z, ident(z)^-1)}` for an isomorphism `ident` between central
/// subgroups, given as its full list of `(z in G, ident(z) in H)` pairs.
pub fn central_product(g: &FiniteGroup, h: &FiniteGroup, ident: &[(ElemId, ElemId)]) -> Result<FiniteGroup> {
    for &(a, b) in ident {
        g.check_element(a)?;
        h.check_element(b)?;
    }
    let domain = Subgroup::new(g, ident.iter().map(|p| p.0).collect())
        .map_err(|_| GroupError::NotIsomorphicCentres)?;
    let range = Subgroup::new(h, ident.iter().map(|p| p.1).collect())
        .map_err(|_| GroupError::NotIsomorphicCentres)?;
    if !domain.is_subset_of(g.centre()) || !range.is_subset_of(h.centre()) {
        return Err(GroupError::NotCentral);
    }
    if domain.order() != ident.len() || range.order() != ident.len() {
        return Err(GroupError::NotIsomorphicCentres);
    }
    let map = |z: ElemId| ident.iter().find(|p| p.0 == z).map(|p| p.1).unwrap();
    for &(a, fa) in ident {
        for &(b, fb) in ident {
            if map(g.mul(a, b)) != h.mul(fa, fb) {
                return Err(GroupError::NotIsomorphicCentres);
            }
        }
    }
    let product = direct_product(g, h)?;
    let n = h.order() as ElemId;
    let kernel = Subgroup::from_unsorted(ident.iter().map(|&(a, b)| a * n + h.inv(b)).collect());
    Ok(product.quotient(&kernel)?.group().clone())
}

/// Pairs `(z^k, w^k)` for generators `z`, `w` of cyclic centres of equal order,
/// each the smallest-id generator.
pub fn identify_centres(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<(ElemId, ElemId)>> {
    let (zg, zh) = (g.centre(), h.centre());
    if zg.order() != zh.order() {
        return Err(GroupError::NotIsomorphicCentres);
    }
    let k = zg.order() as u32;
    let gen_of = |grp: &FiniteGroup, z: &Subgroup| {
        z.members()
            .iter()
            .copied()
            .find(|&x| grp.element_order(x) == k)
            .ok_or(GroupError::NotIsomorphicCentres)
    };
    let (a, b) = (gen_of(g, zg)?, gen_of(h, zh)?);
    Ok((0..k as u64).map(|e| (g.pow(a, e), h.pow(b, e))).collect())
}

/// Heisenberg group of order `p^3`: `(a, b, c)(a', b', c') = (a+a', b+b', c+c'+ab')`.
fn heisenberg(p: usize) -> Result<FiniteGroup> {
    table_group(p * p * p, |x, y| {
        let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
        let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

/// `<x, y | x^(p^2) = y^p = 1, y x y^-1 = x^(1+p)>`, element `i + p^2 j` = `x^i y^j`.
fn metacyclic_exponent_p2(p: usize) -> Result<FiniteGroup> {
    let p2 = p * p;
    let twist: Vec<usize> = (0..p).scan(1usize, |acc, _| {
        let cur = *acc;
        *acc = *acc * (1 + p) % p2;
        Some(cur)
    })
    .collect();
    table_group(p2 * p, |x, y| {
        let (i, j) = (x % p2, x / p2);
        let (k, l) = (y % p2, y / p2);
        (i + k * twist[j]) % p2 + p2 * ((j + l) % p)
    })
}

/// Extraspecial group of order `p^(2n+1)`, as an iterated central product of
/// `n` factors of order `p^3`. For `p = 2`: `plus` uses `D8` factors only,
/// `minus` replaces one by `Q8`. For odd `p`: `plus` uses exponent-`p` factors
/// only, `minus` replaces one by the exponent-`p^2` group.
pub fn extraspecial(p: u64, n: u32, variant: Variant) -> Result<FiniteGroup> {
    if prime_power(p).map(|(_, k)| k) != Some(1) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(GroupError::InvalidParameter("n must be positive".into()));
    }
    let order = (p as usize).checked_pow(2 * n + 1).unwrap_or(usize::MAX);
    if order > DENSE_TABLE_LIMIT {
        return Err(GroupError::CapExceeded {
            what: "extraspecial order",
            size: order,
            cap: DENSE_TABLE_LIMIT,
        });
    }
    let p = p as usize;
    let (plus, minus) = if p == 2 {
        (dihedral(8)?, quaternion_generalised(8)?)
    } else {
        (heisenberg(p)?, metacyclic_exponent_p2(p)?)
    };
    let mut g = match variant {
        Variant::Plus => plus.clone(),
        Variant::Minus => minus,
    };
    for _ in 1..n {
        let ident = identify_centres(&g, &plus)?;
        g = central_product(&g, &plus, &ident)?;
    }
    Ok(g)
}

fn field_for(q: u64) -> Result<GaloisField> {
    GaloisField::new(q)
}

fn transvection_generators(f: &GaloisField) -> Vec<Matrix2> {
    let w = f.primitive_element();
    let (zero, one) = (f.zero(), f.one());
    (0..f.degree())
        .flat_map(|i| {
            let a = f.pow(w, i);
            [Matrix2::new(one, a, zero, one), Matrix2::new(one, zero, a, one)]
        })
        .collect()
}

fn vector_permutation(m: &Matrix2, f: &GaloisField) -> Result<Permutation> {
    let q = f.order();
    let images = (1..q * q)
        .map(|v| {
            let (x, y) = m.apply((FieldElement(v % q), FieldElement(v / q)), f);
            (x.0 + q * y.0 - 1) as usize
        })
        .collect();
    Permutation::from_images(images)
}

fn mobius_permutation(m: &Matrix2, f: &GaloisField) -> Result<Permutation> {
    let q = f.order();
    let images = (0..=q)
        .map(|z| {
            let pt = if z == q { None } else { Some(FieldElement(z)) };
            m.mobius(pt, f).map_or(q, |v| v.0) as usize
        })
        .collect();
    Permutation::from_images(images)
}

fn diag_primitive(f: &GaloisField) -> Matrix2 {
    Matrix2::new(f.primitive_element(), f.zero(), f.zero(), f.one())
}

fn check_linear_order(q: u64, order: u64) -> Result<()> {
    if order < 4 {
        return Err(GroupError::InvalidParameter(format!(
            "group over GF({q}) has order {order} < 4"
        )));
    }
    Ok(())
}

pub fn gl2(q: u64) -> Result<FiniteGroup> {
    let f = field_for(q)?;
    check_linear_order(q, (q * q - 1) * (q * q - q))?;
    let mut mats = transvection_generators(&f);
    mats.push(diag_primitive(&f));
    let gens = mats.iter().map(|m| vector_permutation(m, &f)).collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations((q * q - 1) as usize, &gens)
}

pub fn sl2(q: u64) -> Result<FiniteGroup> {
    let f = field_for(q)?;
    check_linear_order(q, q * (q * q - 1))?;
    let gens = transvection_generators(&f)
        .iter()
        .map(|m| vector_permutation(m, &f))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations((q * q - 1) as usize, &gens)
}

pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / gcd(2, q - 1)
}

pub fn pgl2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

pub fn psl2(q: u64) -> Result<FiniteGroup> {
    let f = field_for(q)?;
    check_linear_order(q, psl2_order(q))?;
    let gens = transvection_generators(&f)
        .iter()
        .map(|m| mobius_permutation(m, &f))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(q as usize + 1, &gens)
}

pub fn pgl2(q: u64) -> Result<FiniteGroup> {
    let f = field_for(q)?;
    check_linear_order(q, pgl2_order(q))?;
    let mut mats = transvection_generators(&f);
    mats.push(diag_primitive(&f));
    let gens = mats.iter().map(|m| mobius_permutation(m, &f)).collect::<Result<Vec<_>>>()?;
    FiniteGroup::from_permutations(q as usize + 1, &gens)
}

/// `x -> ax + b` on `GF(q)` with `a` in the subgroup of order `d` of `GF(q)*`.
pub fn frobenius_affine(q: u64, d: u64) -> Result<FiniteGroup> {
    let f = field_for(q)?;
    if d <= 1 || !(q - 1).is_multiple_of(d) {
        return Err(GroupError::BadDivisor { q, d });
    }
    let w = f.primitive_element();
    let scale = f.pow(w, ((q - 1) / d) as u32);
    let mut gens = Vec::new();
    for i in 0..f.degree() {
        let b = f.pow(w, i);
        gens.push(Permutation::from_images(
            f.elements().map(|x| f.add(x, b).0 as usize).collect(),
        )?);
    }
    gens.push(Permutation::from_images(
        f.elements().map(|x| f.mul(scale, x).0 as usize).collect(),
    )?);
    FiniteGroup::from_permutations(q as usize, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphic;

    #[test]
    fn small_families() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        let d8 = dihedral(8).unwrap();
        assert_eq!((d8.order(), d8.centre().order()), (8, 2));
        assert_eq!(dihedral(4).unwrap().exponent(), 2);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert!(matches!(symmetric(9), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn quaternion_family() {
        let q8 = quaternion_generalised(8).unwrap();
        assert_eq!(q8.centre().order(), 2);
        assert_eq!(q8.order_profile(), vec![(1, 1), (2, 1), (4, 6)]);
        let q16 = quaternion_generalised(16).unwrap();
        assert_eq!(q16.order_profile(), vec![(1, 1), (2, 1), (4, 10), (8, 4)]);
        assert!(isomorphic(&quaternion_generalised(4).unwrap(), &cyclic(4).unwrap()).unwrap());
        // dicyclic of order 12 is not D12
        assert!(!isomorphic(&quaternion_generalised(12).unwrap(), &dihedral(12).unwrap()).unwrap());
    }

    #[test]
    fn direct_products() {
        let s3 = symmetric(3).unwrap();
        assert!(isomorphic(&direct_product(&cyclic(1).unwrap(), &s3).unwrap(), &s3).unwrap());
        let v4 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(v4.exponent(), 2);
        let g = direct_product(&cyclic(3).unwrap(), &dihedral(8).unwrap()).unwrap();
        assert_eq!((g.order(), g.centre().order()), (24, 6));
    }

    #[test]
    fn large_direct_product_uses_permutations() {
        let g = direct_product(&symmetric(5).unwrap(), &symmetric(5).unwrap()).unwrap();
        assert_eq!(g.order(), 14400);
        assert_eq!(g.centre().order(), 1);
    }

    #[test]
    fn central_products() {
        let d8 = dihedral(8).unwrap();
        let q8 = quaternion_generalised(8).unwrap();
        let dd = central_product(&d8, &d8, &identify_centres(&d8, &d8).unwrap()).unwrap();
        assert_eq!((dd.order(), dd.centre().order()), (32, 2));
        let dq = central_product(&d8, &q8, &identify_centres(&d8, &q8).unwrap()).unwrap();
        assert_eq!((dq.order(), dq.centre().order()), (32, 2));
        assert!(!isomorphic(&dd, &dq).unwrap());
        // absorbing a cyclic factor identified with the centre
        let c2 = cyclic(2).unwrap();
        let absorbed = central_product(&q8, &c2, &identify_centres(&q8, &c2).unwrap()).unwrap();
        assert!(isomorphic(&absorbed, &q8).unwrap());
    }

    #[test]
    fn central_product_errors() {
        let s3 = symmetric(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let t = s3.generators()[0];
        assert_eq!(s3.element_order(t), 2);
        assert!(matches!(
            central_product(&s3, &c2, &[(0, 0), (t, 1)]),
            Err(GroupError::NotCentral)
        ));
        let c4 = cyclic(4).unwrap();
        assert!(matches!(
            central_product(&c4, &c2, &[(0, 0), (2, 0)]),
            Err(GroupError::NotIsomorphicCentres)
        ));
    }

    #[test]
    fn extraspecial_groups() {
        let e = extraspecial(2, 1, Variant::Plus).unwrap();
        assert!(isomorphic(&e, &dihedral(8).unwrap()).unwrap());
        for (p, n, v) in [(2, 2, Variant::Plus), (2, 2, Variant::Minus), (3, 1, Variant::Plus), (3, 1, Variant::Minus)] {
            let g = extraspecial(p, n, v).unwrap();
            assert_eq!(g.order() as u64, p.pow(2 * n + 1));
            assert_eq!(g.centre().order() as u64, p);
            assert_eq!(g.derived_subgroup(), g.centre());
        }
        assert_eq!(extraspecial(3, 1, Variant::Plus).unwrap().exponent(), 3);
        assert_eq!(extraspecial(3, 1, Variant::Minus).unwrap().exponent(), 9);
        assert!(matches!(extraspecial(5, 2, Variant::Plus), Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn extraspecial_243_class_sizes() {
        let g = extraspecial(3, 2, Variant::Plus).unwrap();
        assert_eq!(g.order(), 243);
        let sizes = g.conjugacy_classes().sizes();
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 3);
        assert!(sizes.iter().all(|&s| s == 1 || s == 3));
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(gl2(3).unwrap().order(), 48);
        assert_eq!(sl2(3).unwrap().order(), 24);
        assert_eq!(sl2(5).unwrap().order(), 120);
        for q in [4u64, 5, 7, 8, 9] {
            assert_eq!(psl2(q).unwrap().order() as u64, psl2_order(q), "psl2({q})");
            assert_eq!(pgl2(q).unwrap().order() as u64, pgl2_order(q), "pgl2({q})");
        }
        assert!(matches!(psl2(6), Err(GroupError::NotPrimePower(6))));
        assert!(psl2(2).is_ok());
    }

    #[test]
    fn linear_group_isomorphisms() {
        let a5 = alternating(5).unwrap();
        assert!(isomorphic(&psl2(5).unwrap(), &a5).unwrap());
        assert!(isomorphic(&psl2(4).unwrap(), &psl2(5).unwrap()).unwrap());
        assert!(isomorphic(&pgl2(5).unwrap(), &symmetric(5).unwrap()).unwrap());
        for q in [4, 5, 7, 8, 9] {
            let g = psl2(q).unwrap();
            assert_eq!(g.normal_subgroups().unwrap().len(), 2, "psl2({q}) simple");
        }
    }

    #[test]
    fn affine_frobenius_groups() {
        assert!(isomorphic(&frobenius_affine(3, 2).unwrap(), &symmetric(3).unwrap()).unwrap());
        let f20 = frobenius_affine(5, 4).unwrap();
        assert_eq!((f20.order(), f20.centre().order()), (20, 1));
        assert!(isomorphic(&frobenius_affine(4, 3).unwrap(), &alternating(4).unwrap()).unwrap());
        assert!(matches!(frobenius_affine(7, 4), Err(GroupError::BadDivisor { q: 7, d: 4 })));
        assert!(matches!(frobenius_affine(7, 1), Err(GroupError::BadDivisor { .. })));
    }

    #[test]
    fn affine_point_stabiliser_meets_conjugates_trivially() {
        for (q, d) in [(5, 4), (7, 3), (8, 7), (9, 4)] {
            let g = frobenius_affine(q, d).unwrap();
            // stabiliser of the point 0
            let stab = Subgroup::from_unsorted(
                g.elements().filter(|&x| g.permutation(x).unwrap().apply(0) == 0).collect(),
            );
            assert_eq!(stab.order() as u64, d);
            for x in g.elements() {
                if !stab.contains(x) {
                    assert!(stab.intersection(&stab.conjugate(&g, x)).is_trivial());
                }
            }
        }
    }
}
