use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{close, Automorphism, ElementForm, GroupTable};
use crate::error::{CoreError, Result};
use crate::fp::{self, Matrix};
use crate::perm::Perm;
use crate::spec::GroupSpec;

pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// Generators read from an external file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorData {
    /// 0-based image arrays.
    Perm { degree: usize, gens: Vec<Vec<u32>> },
    /// Row-major `n x n` matrices over `F_p`.
    Matrix { p: u32, n: usize, gens: Vec<Vec<u32>> },
}

/// Resolves `file(..)` specs; the core crate does no IO itself.
pub trait GeneratorLoader {
    fn load(&self, path: &str) -> Result<GeneratorData>;
}

#[derive(Clone, Copy)]
pub struct BuildOptions<'a> {
    pub cap: usize,
    pub loader: Option<&'a dyn GeneratorLoader>,
}

impl Default for BuildOptions<'_> {
    fn default() -> Self {
        BuildOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            loader: None,
        }
    }
}

impl BuildOptions<'_> {
    pub fn with_cap(cap: usize) -> Self {
        BuildOptions { cap, loader: None }
    }
}

pub fn build_group(spec: &GroupSpec, opts: &BuildOptions<'_>) -> Result<GroupTable> {
    spec.validate()?;
    if let Some(order) = spec.projected_order() {
        if order > opts.cap as u128 {
            return Err(CoreError::CapExceeded {
                what: "group order",
                size: order,
                cap: opts.cap as u128,
            });
        }
    }
    let name = spec.render();
    let mut t = match spec {
        GroupSpec::Alternating(n) => perm_group(*n as usize, alternating_gens(*n as usize), opts)?,
        GroupSpec::Symmetric(n) => perm_group(*n as usize, symmetric_gens(*n as usize), opts)?,
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            let gens = if n > 1 { alloc::vec![cycle(n, 0..n)] } else { Vec::new() };
            perm_group(n, gens, opts)?
        }
        GroupSpec::Dihedral(n) => {
            let n = *n as usize;
            let rot = cycle(n, 0..n);
            let refl = Perm::from_images((0..n).map(|x| ((n - x) % n) as u16).collect())?;
            perm_group(n, alloc::vec![rot, refl], opts)?
        }
        GroupSpec::SpecialLinear { n, p } => {
            matrix_group(*n as usize, *p, sl_gens(*n as usize, *p), opts)?
        }
        GroupSpec::GeneralLinear { n, p } => {
            let (n, p) = (*n as usize, *p);
            let mut gens = sl_gens(n, p);
            if p > 2 {
                let mut d = Matrix::identity(n, p);
                d.set(0, 0, fp::primitive_root(p));
                gens.push(d);
            }
            matrix_group(n, p, gens, opts)?
        }
        GroupSpec::ProjectiveSpecialLinear { n, p } => {
            let sl = matrix_group(*n as usize, *p, sl_gens(*n as usize, *p), opts)?;
            let z = scalar_subgroup(&sl);
            sl.quotient(&z)?.table
        }
        GroupSpec::File(path) => {
            let loader = opts.loader.ok_or_else(|| {
                CoreError::InvalidSpec(alloc::format!("no loader available for file({path})"))
            })?;
            match loader.load(path)? {
                GeneratorData::Perm { degree, gens } => {
                    let gens = gens
                        .into_iter()
                        .map(|g| {
                            if g.len() != degree {
                                return Err(CoreError::LengthMismatch {
                                    expected: degree,
                                    got: g.len(),
                                });
                            }
                            Perm::from_images(g.into_iter().map(|x| x as u16).collect())
                        })
                        .collect::<Result<Vec<_>>>()?;
                    perm_group(degree, gens, opts)?
                }
                GeneratorData::Matrix { p, n, gens } => {
                    if !fp::is_prime(p) {
                        return Err(CoreError::InvalidSpec(alloc::format!("{p} is not prime")));
                    }
                    let gens = gens
                        .into_iter()
                        .map(|g| {
                            let m = Matrix::new(n, p, g)?;
                            if m.det() == 0 {
                                return Err(CoreError::InvalidSpec("singular generator".into()));
                            }
                            Ok(m)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    matrix_group(n, p, gens, opts)?
                }
            }
        }
        GroupSpec::Direct(fs) => {
            let tables = fs
                .iter()
                .map(|f| build_group(f, opts).map(Arc::new))
                .collect::<Result<Vec<_>>>()?;
            super::direct_product(&tables, opts.cap)?
        }
        GroupSpec::Central {
            factors,
            identification,
        } => {
            let tables = factors
                .iter()
                .map(|f| build_group(f, opts).map(Arc::new))
                .collect::<Result<Vec<_>>>()?;
            super::central_product(&tables, identification, opts.cap)?
        }
        GroupSpec::Semidirect {
            normal,
            order,
            images,
        } => {
            let n = Arc::new(build_group(normal, opts)?);
            let gens = n.generators().to_vec();
            let auto = Automorphism::from_images(&n, &gens, images)?;
            super::semidirect_cyclic(n, *order, &auto, opts.cap)?
        }
        GroupSpec::Tau(ns) => super::tau_product(ns, opts.cap)?,
    };
    t.set_name(name);
    Ok(t)
}

fn cycle(n: usize, pts: core::ops::Range<usize>) -> Perm {
    Perm::from_cycles(n, &[pts.collect()]).expect("valid cycle")
}

pub(crate) fn alternating_gens(n: usize) -> Vec<Perm> {
    match n {
        0..=2 => Vec::new(),
        3 => alloc::vec![cycle(3, 0..3)],
        _ => {
            let long = if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) };
            alloc::vec![cycle(n, 0..3), long]
        }
    }
}

fn symmetric_gens(n: usize) -> Vec<Perm> {
    match n {
        0 | 1 => Vec::new(),
        2 => alloc::vec![cycle(2, 0..2)],
        _ => alloc::vec![cycle(n, 0..2), cycle(n, 0..n)],
    }
}

fn sl_gens(n: usize, p: u32) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::identity(n, p);
                m.set(i, j, 1);
                gens.push(m);
            }
        }
    }
    gens
}

pub(crate) fn perm_group(degree: usize, gens: Vec<Perm>, opts: &BuildOptions<'_>) -> Result<GroupTable> {
    let ngens = gens.len();
    let forms: Vec<ElementForm> = gens.into_iter().map(ElementForm::Perm).collect();
    let closure = close(
        ElementForm::Perm(Perm::identity(degree)),
        &forms,
        |a, b| match (a, b) {
            (ElementForm::Perm(a), ElementForm::Perm(b)) => ElementForm::Perm(a.then(b)),
            _ => unreachable!(),
        },
        opts.cap,
    )?;
    Ok(GroupTable::from_closure(
        "perm".to_string(),
        closure,
        ngens,
    ))
}

pub(crate) fn matrix_group(
    n: usize,
    p: u32,
    gens: Vec<Matrix>,
    opts: &BuildOptions<'_>,
) -> Result<GroupTable> {
    let ngens = gens.len();
    let forms: Vec<ElementForm> = gens.into_iter().map(ElementForm::Matrix).collect();
    let closure = close(
        ElementForm::Matrix(Matrix::identity(n, p)),
        &forms,
        |a, b| match (a, b) {
            (ElementForm::Matrix(a), ElementForm::Matrix(b)) => ElementForm::Matrix(a.mul(b)),
            _ => unreachable!(),
        },
        opts.cap,
    )?;
    Ok(GroupTable::from_closure(
        "matrix".to_string(),
        closure,
        ngens,
    ))
}

/// Scalar matrices inside a matrix group.
pub(crate) fn scalar_subgroup(g: &GroupTable) -> crate::bitset::ElementSet {
    crate::bitset::ElementSet::from_indices(
        g.order(),
        g.elements().filter(|&x| match g.form(x) {
            ElementForm::Matrix(m) => m.is_scalar(),
            _ => false,
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> GroupTable {
        build_group(&GroupSpec::parse(s).unwrap(), &BuildOptions::default()).unwrap()
    }

    /// Independent count of 2x2 determinant-one matrices over F_p.
    fn brute_sl2(p: u32) -> usize {
        let mut n = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c) % p == 1 {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    #[test]
    fn orders_of_standard_groups() {
        assert_eq!(build("A_5").order(), 60);
        assert_eq!(build("S_4").order(), 24);
        assert_eq!(build("D_8").order(), 16);
        assert_eq!(build("C_7").order(), 7);
        assert_eq!(build("A_4").order(), 12);
        assert_eq!(build("A_3").order(), 3);
        assert_eq!(build("GL(2,3)").order(), 48);
        assert_eq!(build("PSL(2,7)").order(), 168);
        assert_eq!(build("PSL(3,2)").order(), 168);
        assert_eq!(build("SL(3,2)").order(), 168);
    }

    #[test]
    fn sl2_orders_match_brute_force() {
        for p in [2, 3, 5, 7] {
            assert_eq!(build(&alloc::format!("SL(2,{p})")).order(), brute_sl2(p));
        }
    }

    #[test]
    fn trivial_group() {
        let t = build("trivial");
        assert_eq!(t.order(), 1);
        assert_eq!(t.mul(0, 0), 0);
        assert_eq!(t.inv(0), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let err = build_group(&GroupSpec::Alternating(8), &BuildOptions::with_cap(1000)).unwrap_err();
        assert!(err.is_cap());
        let err = build_group(&GroupSpec::Alternating(30), &BuildOptions::default()).unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn missing_loader_is_invalid_spec() {
        let err = build_group(&GroupSpec::File("g.json".into()), &BuildOptions::default()).unwrap_err();
        assert!(matches!(err, CoreError::InvalidSpec(_)));
    }
}
