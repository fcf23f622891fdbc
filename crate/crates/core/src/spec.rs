//! Textual names for the groups the toolkit can build.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! spec  := term (" x " term)*
//! term  := A_n | S_n | D_n | C_n | trivial
//!        | SL(n,p) | GL(n,p) | PSL(n,p)
//!        | file(path)
//!        | direct(spec, spec, ..)
//!        | central(spec, spec, .. [; trivial | centers | glue(i,j,..)(..)])
//!        | semidirect(spec; k; i, j, ..)
//!        | tau(n, m, ..)
//! ```
//!
//! `D_n` is the dihedral group of order `2n`. In `glue(..)` and
//! `semidirect(..)` the integers are element indices of the already built
//! factor tables, whose enumeration order is deterministic.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CoreError, Result};
use crate::fp::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Alternating(u32),
    Symmetric(u32),
    Dihedral(u32),
    Cyclic(u32),
    SpecialLinear { n: u32, p: u32 },
    GeneralLinear { n: u32, p: u32 },
    ProjectiveSpecialLinear { n: u32, p: u32 },
    File(String),
    Direct(Vec<GroupSpec>),
    Central {
        factors: Vec<GroupSpec>,
        identification: Identification,
    },
    /// `normal ⋊ C_order`, the generator of `C_order` acting through the
    /// automorphism sending the i-th generator of `normal` to `images[i]`.
    Semidirect {
        normal: Box<GroupSpec>,
        order: u32,
        images: Vec<u32>,
    },
    /// `(A_n1 × A_n2 × ..) ⋊ C_2`, the involution acting on every factor as
    /// conjugation by the transposition `(1 2)`.
    Tau(Vec<u32>),
}

/// How the centres of the factors of a central product are glued.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Identification {
    /// No gluing: the direct product.
    Trivial,
    /// Each factor's centre must be cyclic of one common order; the least
    /// generator of each centre is identified with the others.
    Centers,
    /// Each inner vector lists one central element per factor; the element
    /// `(z_1, .., z_k)` of the direct product is killed.
    Glue(Vec<Vec<u32>>),
}

impl GroupSpec {
    pub fn trivial() -> GroupSpec {
        GroupSpec::Cyclic(1)
    }

    pub fn parse(s: &str) -> Result<GroupSpec> {
        let spec = parse_spec(s.trim())?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CoreError::InvalidSpec(m));
        match self {
            GroupSpec::Alternating(n) | GroupSpec::Symmetric(n) | GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return bad(alloc::format!("degree must be >= 1 in {self}"));
                }
            }
            GroupSpec::Dihedral(n) => {
                if *n < 3 {
                    return bad(alloc::format!("dihedral group needs n >= 3, got {n}"));
                }
            }
            GroupSpec::SpecialLinear { n, p }
            | GroupSpec::GeneralLinear { n, p }
            | GroupSpec::ProjectiveSpecialLinear { n, p } => {
                if *n == 0 {
                    return bad(alloc::format!("dimension must be >= 1 in {self}"));
                }
                if !is_prime(*p) {
                    return bad(alloc::format!("{p} is not prime"));
                }
                if *p > u16::MAX as u32 {
                    return bad(alloc::format!("prime {p} too large"));
                }
            }
            GroupSpec::File(path) => {
                if path.is_empty() {
                    return bad("empty file path".into());
                }
            }
            GroupSpec::Direct(fs) => {
                if fs.is_empty() {
                    return bad("direct product of nothing".into());
                }
                for f in fs {
                    f.validate()?;
                }
            }
            GroupSpec::Central {
                factors,
                identification,
            } => {
                if factors.is_empty() {
                    return bad("central product of nothing".into());
                }
                for f in factors {
                    f.validate()?;
                }
                if let Identification::Glue(g) = identification {
                    if g.iter().any(|v| v.len() != factors.len()) {
                        return bad("glue vectors need one entry per factor".into());
                    }
                }
            }
            GroupSpec::Semidirect { normal, order, .. } => {
                if *order == 0 {
                    return bad("semidirect product by C_0".into());
                }
                normal.validate()?;
            }
            GroupSpec::Tau(ns) => {
                for (i, &n) in ns.iter().enumerate() {
                    if n < 5 {
                        return bad(alloc::format!("tau factors need n >= 5, got {n}"));
                    }
                    if ns[..i].contains(&n) {
                        return Err(CoreError::RepeatedDegree(n));
                    }
                }
            }
        }
        Ok(())
    }

    /// Group order computed from the spec alone, when that is possible
    /// without building anything.
    pub fn projected_order(&self) -> Option<u128> {
        fn fact(n: u32) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b))
        }
        fn gl(n: u32, p: u32) -> Option<u128> {
            let q = p as u128;
            let qn = q.checked_pow(n)?;
            let mut acc = 1u128;
            for i in 0..n {
                acc = acc.checked_mul(qn - q.checked_pow(i)?)?;
            }
            Some(acc)
        }
        match self {
            GroupSpec::Alternating(n) => Some(if *n <= 1 { 1 } else { fact(*n)? / 2 }),
            GroupSpec::Symmetric(n) => fact(*n),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::GeneralLinear { n, p } => gl(*n, *p),
            GroupSpec::SpecialLinear { n, p } => Some(gl(*n, *p)? / (*p as u128 - 1)),
            GroupSpec::ProjectiveSpecialLinear { n, p } => {
                let sl = gl(*n, *p)? / (*p as u128 - 1);
                let z = gcd(*n as u128, *p as u128 - 1);
                Some(sl / z)
            }
            GroupSpec::File(_) => None,
            GroupSpec::Direct(fs) => fs
                .iter()
                .try_fold(1u128, |a, f| a.checked_mul(f.projected_order()?)),
            GroupSpec::Central { .. } => None,
            GroupSpec::Semidirect { normal, order, .. } => {
                normal.projected_order()?.checked_mul(*order as u128)
            }
            GroupSpec::Tau(ns) => ns.iter().try_fold(2u128, |a, &n| a.checked_mul(fact(n)? / 2)),
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alternating(n) => write!(f, "A_{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S_{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D_{n}"),
            GroupSpec::Cyclic(n) => write!(f, "C_{n}"),
            GroupSpec::SpecialLinear { n, p } => write!(f, "SL({n},{p})"),
            GroupSpec::GeneralLinear { n, p } => write!(f, "GL({n},{p})"),
            GroupSpec::ProjectiveSpecialLinear { n, p } => write!(f, "PSL({n},{p})"),
            GroupSpec::File(path) => write!(f, "file({path})"),
            GroupSpec::Direct(fs) => write!(f, "direct({})", join(fs, ", ")),
            GroupSpec::Central {
                factors,
                identification,
            } => {
                write!(f, "central({}", join(factors, ", "))?;
                match identification {
                    Identification::Centers => {}
                    Identification::Trivial => write!(f, "; trivial")?,
                    Identification::Glue(g) => {
                        write!(f, "; glue")?;
                        for v in g {
                            write!(f, "({})", join(v, ","))?;
                        }
                    }
                }
                write!(f, ")")
            }
            GroupSpec::Semidirect {
                normal,
                order,
                images,
            } => write!(f, "semidirect({normal}; {order}; {})", join(images, ",")),
            GroupSpec::Tau(ns) => write!(f, "tau({})", join(ns, ",")),
        }
    }
}

fn perr(m: String) -> CoreError {
    CoreError::Parse(m)
}

/// Splits on `sep` at parenthesis depth zero.
fn split_top(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr(alloc::format!("unbalanced parentheses in {s:?}")));
                }
            }
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(perr(alloc::format!("unbalanced parentheses in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

/// Splits `a x b x c` on the infix product sign at depth zero.
fn split_infix_product(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'x' if depth == 0
                && i > 0
                && i + 1 < bytes.len()
                && bytes[i - 1] == b' '
                && bytes[i + 1] == b' ' =>
            {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    out.push(&s[start..]);
    Ok(out)
}

fn parse_num(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| perr(alloc::format!("expected an integer, got {s:?}")))
}

fn parse_num_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_num).collect()
}

/// `name(args)` → `(name, args)`.
fn call(s: &str) -> Option<(&str, &str)> {
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    Some((s[..open].trim(), &s[open + 1..s.len() - 1]))
}

fn parse_spec(s: &str) -> Result<GroupSpec> {
    let parts = split_infix_product(s)?;
    if parts.len() > 1 {
        return Ok(GroupSpec::Direct(
            parts
                .into_iter()
                .map(|p| parse_term(p.trim()))
                .collect::<Result<_>>()?,
        ));
    }
    parse_term(s)
}

fn parse_pair(args: &str) -> Result<(u32, u32)> {
    let v = parse_num_list(args)?;
    match v[..] {
        [n, p] => Ok((n, p)),
        _ => Err(perr(alloc::format!("expected (n,p), got ({args})"))),
    }
}

fn parse_term(s: &str) -> Result<GroupSpec> {
    let s = s.trim();
    if s.is_empty() {
        return Err(perr("empty group spec".into()));
    }
    if s == "trivial" || s == "1" {
        return Ok(GroupSpec::Cyclic(1));
    }
    if let Some((name, args)) = call(s) {
        return match name {
            "SL" => parse_pair(args).map(|(n, p)| GroupSpec::SpecialLinear { n, p }),
            "GL" => parse_pair(args).map(|(n, p)| GroupSpec::GeneralLinear { n, p }),
            "PSL" => parse_pair(args).map(|(n, p)| GroupSpec::ProjectiveSpecialLinear { n, p }),
            "file" => Ok(GroupSpec::File(args.trim().to_string())),
            "tau" => Ok(GroupSpec::Tau(parse_num_list(args)?)),
            "direct" => Ok(GroupSpec::Direct(
                split_top(args, ',')?
                    .into_iter()
                    .map(parse_spec)
                    .collect::<Result<_>>()?,
            )),
            "central" => {
                let sections = split_top(args, ';')?;
                let factors = split_top(sections[0], ',')?
                    .into_iter()
                    .map(parse_spec)
                    .collect::<Result<_>>()?;
                let identification = match sections.get(1).map(|t| t.trim()) {
                    None | Some("centers") => Identification::Centers,
                    Some("trivial") => Identification::Trivial,
                    Some(g) if g.starts_with("glue") => {
                        let mut rest = g["glue".len()..].trim();
                        let mut glue = Vec::new();
                        while !rest.is_empty() {
                            if !rest.starts_with('(') {
                                return Err(perr(alloc::format!("bad glue {g:?}")));
                            }
                            let close = rest
                                .find(')')
                                .ok_or_else(|| perr(alloc::format!("bad glue {g:?}")))?;
                            glue.push(parse_num_list(&rest[1..close])?);
                            rest = rest[close + 1..].trim();
                        }
                        Identification::Glue(glue)
                    }
                    Some(other) => {
                        return Err(perr(alloc::format!("unknown identification {other:?}")))
                    }
                };
                if sections.len() > 2 {
                    return Err(perr(alloc::format!("too many sections in {s:?}")));
                }
                Ok(GroupSpec::Central {
                    factors,
                    identification,
                })
            }
            "semidirect" => {
                let sections = split_top(args, ';')?;
                if sections.len() != 3 {
                    return Err(perr(alloc::format!("semidirect needs 3 sections: {s:?}")));
                }
                Ok(GroupSpec::Semidirect {
                    normal: Box::new(parse_spec(sections[0].trim())?),
                    order: parse_num(sections[1])?,
                    images: parse_num_list(sections[2])?,
                })
            }
            other => Err(perr(alloc::format!("unknown group constructor {other:?}"))),
        };
    }
    let (kind, rest) = s.split_at(1);
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let n = parse_num(rest).map_err(|_| perr(alloc::format!("unknown group {s:?}")))?;
    match kind {
        "A" => Ok(GroupSpec::Alternating(n)),
        "S" => Ok(GroupSpec::Symmetric(n)),
        "D" => Ok(GroupSpec::Dihedral(n)),
        "C" => Ok(GroupSpec::Cyclic(n)),
        _ => Err(perr(alloc::format!("unknown group {s:?}"))),
    }
}
