//! Subcommand implementations.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::Context;
use classcover_core::cover::{cover_row, ls_ratio, require_quasisimple, CoverReport, Covering};
use classcover_core::density::{build_tau_product, dense_closure_check, g_star, tau_coordinate_check};
use classcover_core::filterbase::{
    a_set, cover_certificate, dichotomy, fip_check, h_profile, Coordinate, CoverCertificate, Datum, Family, FipReport,
    Tuple,
};
use classcover_core::group::{Automorphism, ClassAlgebra, ClassTable, ElementForm};
use classcover_core::matgrp::spectrum_element_sl;
use classcover_core::spectrum::{spectrum_element_an, CycleLengthRule, CycleType};
use classcover_core::widths::{
    alpha, factor_swap, inner_check, keyc_check, lemma_useful_check_with, qsimple_check, segal_check, Width,
};
use classcover_core::{build_group, BuildOptions, CoreError, Elem, ElementSet, GroupSpec, GroupTable};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cache::ClassCache;
use crate::cli::*;
use crate::config::RunConfig;
use crate::files::{parse_corpus, parse_family, FileLoader};
use crate::report::Report;

/// Bad invocation: missing or contradictory flags.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub struct Outcome {
    pub report: Report,
    /// Nonzero when the report itself records a failure.
    pub code: i32,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, code: 0 }
    }
}

pub struct Ctx<'a> {
    pub cfg: &'a RunConfig,
    loader: FileLoader,
    cache: Option<ClassCache>,
}

impl<'a> Ctx<'a> {
    pub fn new(cfg: &'a RunConfig) -> anyhow::Result<Ctx<'a>> {
        let cache = cfg.cache_dir.as_ref().map(ClassCache::new).transpose()?;
        Ok(Ctx {
            cfg,
            loader: FileLoader::new(std::env::current_dir()?),
            cache,
        })
    }

    fn opts(&self) -> BuildOptions<'_> {
        BuildOptions {
            cap: self.cfg.enum_cap,
            loader: Some(&self.loader),
        }
    }

    pub fn build(&self, spec: &GroupSpec) -> anyhow::Result<GroupTable> {
        Ok(build_group(spec, &self.opts())?)
    }

    pub fn classes(&self, spec: &GroupSpec, g: &GroupTable) -> anyhow::Result<ClassTable> {
        match &self.cache {
            Some(c) => Ok(c.get_or_compute(&spec.render(), g)?.0),
            None => Ok(ClassTable::new(g)),
        }
    }

    fn specs(&self, a: &GroupsArgs) -> anyhow::Result<Vec<GroupSpec>> {
        let mut out: Vec<GroupSpec> = a.groups.iter().map(|s| GroupSpec::parse(s)).collect::<Result<_, _>>()?;
        if let Some(p) = &a.corpus {
            out.extend(parse_corpus(p).with_context(|| format!("reading corpus {}", p.display()))?);
        }
        if out.is_empty() {
            return Err(usage("no groups given: use --group or --corpus"));
        }
        Ok(out)
    }
}

/// Splits on commas outside `()`, `[]` and `<>`.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '<' => depth += 1,
            ')' | ']' | '>' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
}

pub fn parse_elems(g: &GroupTable, s: &str) -> anyhow::Result<Vec<Elem>> {
    Ok(split_top_level(s)
        .iter()
        .map(|p| g.parse_element(p))
        .collect::<Result<_, _>>()?)
}

/// `G`, `derived`, `center`, `trivial`, `V4` or a generator list.
pub fn parse_target(g: &GroupTable, s: &str) -> anyhow::Result<ElementSet> {
    Ok(match s.trim() {
        "G" | "whole" => g.full_set(),
        "derived" => g.derived_subgroup(),
        "center" => g.center(),
        "trivial" | "e" => g.trivial_set(),
        "V4" => g.normal_closure(&[g.parse_element("(12)(34)")?]),
        other => g.generate(&parse_elems(g, other)?),
    })
}

fn parse_swap(g: &GroupTable, s: &str) -> anyhow::Result<Automorphism> {
    let (i, j) = s
        .split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
        .filter(|&(i, j)| i >= 1 && j >= 1)
        .ok_or_else(|| usage(format!("swap {s:?} is not i,j with 1-based factors")))?;
    Ok(factor_swap(g, i - 1, j - 1)?)
}

fn width_json(w: Width) -> Value {
    match w {
        Width::Reached(t) => json!(t),
        Width::Unreachable => json!("unreachable"),
    }
}

fn alpha_or_null(ctx: &Ctx<'_>, g: &GroupTable) -> anyhow::Result<Value> {
    match alpha(g, ctx.cfg.subgroup_cap, ctx.cfg.lattice_cap) {
        Ok(a) => Ok(json!(a)),
        Err(e) if e.is_cap() => Ok(Value::Null),
        Err(e) => Err(e.into()),
    }
}

fn num(x: f64) -> String {
    format!("{x}")
}

pub fn cover(ctx: &Ctx<'_>, a: &CoverArgs) -> anyhow::Result<Outcome> {
    let specs = ctx.specs(&a.groups)?;
    let strict = a.groups.corpus.is_some();
    let members = specs
        .iter()
        .map(|spec| {
            let g = ctx.build(spec)?;
            if strict {
                require_quasisimple(&g)?;
            }
            let ct = ctx.classes(spec, &g)?;
            let alg = ClassAlgebra::new(&g, &ct);
            let rows = (0..ct.len()).into_par_iter().map(|i| cover_row(&g, &ct, &alg, i)).collect();
            let alpha = if a.with_alpha {
                Some(alpha(&g, ctx.cfg.subgroup_cap, ctx.cfg.lattice_cap)?)
            } else {
                None
            };
            let report = CoverReport {
                group: spec.render(),
                order: g.order(),
                rows,
            };
            let reps: Vec<String> = report.rows.iter().map(|r| g.display(r.rep)).collect();
            Ok((report, reps, alpha))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let keep = |size: usize| a.all_classes || size > 1;
    let cn = |c: &Covering| match c {
        Covering::Finite(n) => n.to_string(),
        Covering::Never(_) => "never".into(),
    };
    if ctx.cfg.format == crate::config::Format::Csv {
        let mut rows = Vec::new();
        for (r, reps, _) in &members {
            for (row, rep) in r.rows.iter().zip(reps) {
                if keep(row.class_size) {
                    rows.push(vec![
                        r.group.clone(),
                        rep.clone(),
                        row.class_size.to_string(),
                        cn(&row.covering),
                        row.ratio.map(num).unwrap_or_default(),
                    ]);
                }
            }
        }
        return Ok(Report::Csv {
            header: vec!["group", "class_rep", "class_size", "cn", "ratio"],
            rows,
        }
        .into());
    }
    let member_json: Vec<Value> = members
        .iter()
        .map(|(r, reps, alpha)| {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .zip(reps)
                .filter(|(row, _)| keep(row.class_size))
                .map(|(row, rep)| {
                    json!({"classRep": rep, "classSize": row.class_size, "cn": match row.covering {
                        Covering::Finite(n) => json!(n),
                        Covering::Never(_) => json!("never"),
                    }, "ratio": row.ratio})
                })
                .collect();
            json!({"group": r.group, "order": r.order, "alpha": alpha, "maxRatio": r.max_ratio(),
                   "maxCn": r.max_noncentral_cn(), "rows": rows})
        })
        .collect();
    let alphas: Vec<u32> = members.iter().map(|m| m.2.unwrap_or(0)).collect();
    let corpus = ls_ratio(members.into_iter().map(|m| m.0).collect(), &alphas);
    let c_alpha = a.with_alpha.then(|| corpus.c_alpha.clone());
    Ok(Report::Json(json!({"members": member_json, "cLS": corpus.c_ls, "cAlpha": c_alpha})).into())
}

fn beta_grid(b: &[f64]) -> Vec<f64> {
    if b.is_empty() {
        (0..=10).map(|i| i as f64 / 10.0).collect()
    } else {
        b.to_vec()
    }
}

pub fn spectrum(ctx: &Ctx<'_>, a: &SpectrumArgs) -> anyhow::Result<Outcome> {
    let betas = beta_grid(&a.beta);
    let json = ctx.cfg.format == crate::config::Format::Json;
    match a.family {
        SpectrumFamily::An => {
            let rule = match a.rule {
                RuleArg::Beta => CycleLengthRule::Beta,
                RuleArg::Alpha => CycleLengthRule::Alpha,
            };
            let betas = &betas;
            let jobs: Vec<(u32, f64)> = a.n.iter().flat_map(|&n| betas.iter().map(move |&b| (n, b))).collect();
            let rows = jobs
                .par_iter()
                .map(|&(n, b)| {
                    let (t, v) = spectrum_element_an(n, b, rule)?;
                    Ok((n, b, t.nontrivial_parts()[0], v.h, (v.h - b).abs()))
                })
                .collect::<Result<Vec<_>, CoreError>>()?;
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| json!({"n": r.0, "beta": r.1, "cycleLength": r.2, "h": r.3, "absError": r.4}))
                    .collect();
                return Ok(Report::Json(Value::Array(v)).into());
            }
            Ok(Report::Csv {
                header: vec!["n", "beta", "cycle_length", "h", "abs_error"],
                rows: rows
                    .iter()
                    .map(|r| vec![r.0.to_string(), num(r.1), r.2.to_string(), num(r.3), num(r.4)])
                    .collect(),
            }
            .into())
        }
        SpectrumFamily::Sl => {
            if a.p.is_empty() {
                return Err(usage("--family sl needs --p"));
            }
            let betas = &betas;
            let jobs: Vec<(u32, u32, f64)> = a
                .n
                .iter()
                .flat_map(|&n| a.p.iter().flat_map(move |&p| betas.iter().map(move |&b| (n, p, b))))
                .collect();
            let rows = jobs
                .par_iter()
                .map(|&(n, p, b)| {
                    let e = spectrum_element_sl(n as usize, p, b)?;
                    Ok((n, p, b, e.blocks.dim_v0, e.value.h))
                })
                .collect::<Result<Vec<_>, CoreError>>()?;
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| json!({"n": r.0, "p": r.1, "beta": r.2, "dimV0": r.3, "h": r.4}))
                    .collect();
                return Ok(Report::Json(Value::Array(v)).into());
            }
            Ok(Report::Csv {
                header: vec!["n", "p", "beta", "dimV0", "h"],
                rows: rows
                    .iter()
                    .map(|r| vec![r.0.to_string(), r.1.to_string(), num(r.2), r.3.to_string(), num(r.4)])
                    .collect(),
            }
            .into())
        }
    }
}

pub fn width(ctx: &Ctx<'_>, a: &WidthArgs) -> anyhow::Result<Outcome> {
    let spec = GroupSpec::parse(&a.group)?;
    let g = ctx.build(&spec)?;
    let gens = parse_elems(&g, &a.gens)?;
    let mut out = json!({"group": spec.render(), "mode": format!("{:?}", a.mode).to_lowercase()});
    let (t, bound, d) = match a.mode {
        WidthMode::Segal => {
            let r = segal_check(&g, &gens)?;
            (r.minimal_t, r.paper_bound, gens.len())
        }
        WidthMode::Keyc => {
            let target = a.target.as_deref().ok_or_else(|| usage("--mode keyc needs --target"))?;
            let h = parse_target(&g, target)?;
            out["targetOrder"] = json!(h.len());
            let r = keyc_check(&g, &h, &gens, ctx.cfg.lattice_cap)?;
            (r.minimal_t, r.paper_bound, gens.len())
        }
        WidthMode::Inner => {
            let r = inner_check(&g, &gens, a.ceiling)?;
            (r.minimal_t, r.paper_bound, gens.len())
        }
        WidthMode::Qsimple => {
            let mut autos: Vec<Automorphism> = gens.iter().map(|&x| Automorphism::inner(&g, x)).collect();
            for s in &a.swap {
                autos.push(parse_swap(&g, s)?);
            }
            let r = qsimple_check(&g, &autos, a.ceiling)?;
            out["eligible"] = json!(r.eligible);
            (r.minimal_c, None, autos.len())
        }
    };
    out["d"] = json!(d);
    out["alpha"] = alpha_or_null(ctx, &g)?;
    out["minimalT"] = width_json(t);
    out["paperBound"] = json!(bound);
    Ok(Report::Json(out).into())
}

pub fn lemma_check(ctx: &Ctx<'_>, a: &LemmaArgs) -> anyhow::Result<Outcome> {
    let specs = ctx.specs(&a.groups)?;
    let mut rows = Vec::new();
    let mut total = 0usize;
    for spec in &specs {
        let g = ctx.build(spec)?;
        let ct = ctx.classes(spec, &g)?;
        let mut autos: Vec<(String, Automorphism)> = ct
            .classes()
            .iter()
            .map(|c| (format!("inner {}", g.display(c.rep)), Automorphism::inner(&g, c.rep)))
            .collect();
        for s in &a.swap {
            autos.push((format!("swap {s}"), parse_swap(&g, s)?));
        }
        for s in &a.auto {
            let images = parse_elems(&g, s)?;
            autos.push((format!("images {s}"), Automorphism::from_images(&g, g.generators(), &images)?));
        }
        let counts: Vec<usize> = autos
            .par_iter()
            .map(|(_, f)| lemma_useful_check_with(&g, &ct, f).len())
            .collect();
        for ((name, _), c) in autos.iter().zip(counts) {
            total += c;
            rows.push(vec![spec.render(), name.clone(), c.to_string()]);
        }
    }
    if total > 0 {
        eprintln!("classcover: {total} violations found");
    }
    Ok(Outcome {
        report: Report::Csv {
            header: vec!["group", "automorphism", "violations"],
            rows,
        },
        code: if total > 0 { 1 } else { 0 },
    })
}

pub fn qsimple(ctx: &Ctx<'_>, a: &QsimpleArgs) -> anyhow::Result<Outcome> {
    let spec = GroupSpec::parse(&a.group)?;
    let g = ctx.build(&spec)?;
    let mut autos = Vec::new();
    for s in &a.swap {
        autos.push(parse_swap(&g, s)?);
    }
    for x in parse_elems(&g, &a.inner)? {
        autos.push(Automorphism::inner(&g, x));
    }
    if autos.is_empty() {
        return Err(usage("give at least one --swap or --inner element"));
    }
    let r = qsimple_check(&g, &autos, a.ceiling)?;
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| json!({"factor": w.factor + 1, "auto": w.auto, "t": g.display(w.t), "v": g.display(w.v)}))
        .collect();
    Ok(Report::Json(json!({
        "group": spec.render(),
        "order": g.order(),
        "eligible": r.eligible,
        "minimalC": width_json(r.minimal_c),
        "witnesses": witnesses,
    }))
    .into())
}

/// `e`, a cycle type `[a,b,..]`, `beta:x`, or an element of an
/// enumerated coordinate.
pub fn parse_datum(f: &Family, j: usize, s: &str) -> anyhow::Result<Datum> {
    let s = s.trim();
    if s == "e" || s == "id" {
        return Ok(Datum::Identity);
    }
    let c = f.coord(j)?;
    let degree = match c {
        Coordinate::Symbolic(n) => Some(*n),
        Coordinate::Enumerated(e) => match e.group.form(0) {
            ElementForm::Perm(p) => Some(p.degree() as u32),
            _ => None,
        },
    };
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let n = degree.ok_or_else(|| usage(format!("coordinate {j} is not a permutation group")))?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| usage(format!("bad cycle type {s:?}"))))
            .collect::<anyhow::Result<Vec<_>>>()?;
        return Ok(Datum::Cycle(CycleType::new(n, parts)?));
    }
    if let Some(b) = s.strip_prefix("beta:") {
        let beta: f64 = b.parse().map_err(|_| usage(format!("bad datum {s:?}")))?;
        return Ok(match c {
            Coordinate::Symbolic(n) => Datum::Cycle(spectrum_element_an(*n, beta, CycleLengthRule::Beta)?.0),
            Coordinate::Enumerated(e) => {
                let best = e
                    .classes
                    .classes()
                    .iter()
                    .map(|cl| (e.h(cl.rep), cl.rep))
                    .min_by(|x, y| (x.0 - beta).abs().total_cmp(&(y.0 - beta).abs()))
                    .expect("nonempty");
                Datum::Element(best.1)
            }
        });
    }
    match c {
        Coordinate::Enumerated(e) => Ok(Datum::Element(e.group.parse_element(s)?)),
        Coordinate::Symbolic(_) => Err(CoreError::NotEnumerable(j).into()),
    }
}

#[derive(serde::Deserialize)]
#[serde(untagged)]
enum TupleEntry {
    List(Vec<String>),
    Fill {
        all: String,
        #[serde(default)]
        at: BTreeMap<String, String>,
    },
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct TuplesFile {
    tuples: Vec<TupleEntry>,
}

fn fill_tuple(f: &Family, all: &str, at: &BTreeMap<String, String>) -> anyhow::Result<Tuple> {
    let mut t: Tuple = (1..=f.len()).map(|j| parse_datum(f, j, all)).collect::<anyhow::Result<_>>()?;
    for (k, d) in at {
        let j: usize = k.parse().map_err(|_| usage(format!("bad coordinate {k:?}")))?;
        f.coord(j)?;
        t[j - 1] = parse_datum(f, j, d)?;
    }
    Ok(t)
}

pub fn parse_tuples(f: &Family, text: &str) -> anyhow::Result<Vec<Tuple>> {
    let file: TuplesFile = serde_json::from_str(text).map_err(|e| CoreError::Parse(e.to_string()))?;
    file.tuples
        .iter()
        .map(|t| match t {
            TupleEntry::List(v) => {
                if v.len() != f.len() {
                    return Err(CoreError::LengthMismatch {
                        expected: f.len(),
                        got: v.len(),
                    }
                    .into());
                }
                v.iter().enumerate().map(|(i, s)| parse_datum(f, i + 1, s)).collect()
            }
            TupleEntry::Fill { all, at } => fill_tuple(f, all, at),
        })
        .collect()
}

fn fip_json(r: &FipReport) -> Value {
    let cert: Vec<Value> = r
        .certificate
        .iter()
        .map(|c| json!({"index": c.index, "pair": c.pair, "h": c.h}))
        .collect();
    json!({"hasFip": r.has_fip, "witness": r.witness, "certificate": cert})
}

fn certificate_json(f: &Family, c: &CoverCertificate) -> Value {
    let coords: Vec<Value> = c
        .coordinates
        .iter()
        .map(|k| {
            let member = f.coord(k.index).map(|c| c.describe()).unwrap_or_default();
            json!({"index": k.index, "member": member, "exponent": k.exponent})
        })
        .collect();
    json!({"n": c.n, "verified": c.verified, "coordinates": coords})
}

pub fn filterbase(ctx: &Ctx<'_>, a: &FilterbaseArgs) -> anyhow::Result<Outcome> {
    let text = std::fs::read_to_string(&a.family).with_context(|| format!("reading {}", a.family.display()))?;
    let family = Family::build(&parse_family(&text)?, &ctx.opts())?;
    let tuples = match &a.tuples {
        Some(p) => parse_tuples(&family, &read(p)?)?,
        None => vec![fill_tuple(&family, &a.datum, &BTreeMap::new())?],
    };
    if tuples.is_empty() {
        return Err(usage("no tuples"));
    }
    match a.mode {
        FilterMode::Profile | FilterMode::Aset => {
            let mut rows = Vec::new();
            for (i, t) in tuples.iter().enumerate() {
                let h = h_profile(&family, t)?;
                let keep: Vec<usize> = match a.mode {
                    FilterMode::Aset => a_set(&family, t, a.eps)?,
                    _ => (1..=family.len()).collect(),
                };
                for j in keep {
                    rows.push(vec![i.to_string(), j.to_string(), num(h[j - 1])]);
                }
            }
            Ok(Report::Csv {
                header: vec!["tuple", "index", "h"],
                rows,
            }
            .into())
        }
        FilterMode::Fip => {
            let pairs: Vec<(Tuple, f64)> = tuples.into_iter().map(|t| (t, a.eps)).collect();
            Ok(Report::Json(fip_json(&fip_check(&family, &pairs)?)).into())
        }
        FilterMode::Certificate => {
            let c = cover_certificate(&family, &tuples, a.eps)?;
            Ok(Report::Json(certificate_json(&family, &c)).into())
        }
        FilterMode::Dichotomy => {
            let d = dichotomy(&family, &tuples, a.eps)?;
            Ok(Report::Json(json!({
                "fip": fip_json(&d.fip),
                "certificate": d.certificate.as_ref().map(|c| certificate_json(&family, c)),
                "exclusive": d.exclusive(),
            }))
            .into())
        }
    }
}

fn read(p: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

pub fn alpha_cmd(ctx: &Ctx<'_>, a: &GroupsArgs) -> anyhow::Result<Outcome> {
    let specs = ctx.specs(a)?;
    let rows = specs
        .par_iter()
        .map(|spec| {
            let g = ctx.build(spec)?;
            let k = alpha(&g, ctx.cfg.subgroup_cap, ctx.cfg.lattice_cap)?;
            Ok(vec![spec.render(), g.order().to_string(), k.to_string()])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Report::Csv {
        header: vec!["group", "order", "alpha"],
        rows,
    }
    .into())
}

pub fn density(ctx: &Ctx<'_>, a: &DensityArgs) -> anyhow::Result<Outcome> {
    let (name, g) = match (&a.tau_product, &a.group) {
        (Some(ns), None) => (GroupSpec::Tau(ns.clone()).render(), build_tau_product(ns, ctx.cfg.enum_cap)?),
        (None, Some(s)) => {
            let spec = GroupSpec::parse(s)?;
            (spec.render(), ctx.build(&spec)?)
        }
        _ => return Err(usage("give exactly one of --tau-product and --group")),
    };
    let mut out = json!({
        "group": name,
        "order": g.order(),
        "abelianizationOrder": g.order() / g.derived_subgroup().len(),
    });
    if a.check_closure {
        let tau = g
            .distinguished("tau")
            .ok_or_else(|| usage("--check-closure needs a group with a distinguished tau"))?;
        let (whole, closure) = dense_closure_check(&g, tau);
        out["closureOrder"] = json!(closure.len());
        out["closureIsWhole"] = json!(whole);
    }
    if a.coordinates {
        let ns = a
            .tau_product
            .as_ref()
            .ok_or_else(|| usage("--coordinates needs --tau-product"))?;
        let v: Vec<Value> = tau_coordinate_check(ns, ctx.cfg.enum_cap)?
            .into_iter()
            .map(|(n, ok)| json!({"n": n, "closureIsWhole": ok}))
            .collect();
        out["coordinates"] = Value::Array(v);
    }
    if a.gstar {
        let d = g_star(&g, ctx.cfg.lattice_cap)?;
        out["gStarOrder"] = json!(d.g_star.len());
        out["derivedOrder"] = json!(d.derived.len());
        out["simpleQuotientOrders"] = json!(d.simple_factors.iter().map(|f| f.order).collect::<Vec<_>>());
        out["productForm"] = json!(d.product_form);
    }
    Ok(Report::Json(out).into())
}

pub fn residuals(ctx: &Ctx<'_>, a: &GroupsArgs) -> anyhow::Result<Outcome> {
    let specs = ctx.specs(a)?;
    let rows = specs
        .par_iter()
        .map(|spec| {
            let g = ctx.build(spec)?;
            let r = g.residuals(ctx.cfg.lattice_cap)?;
            Ok(vec![
                spec.render(),
                g.order().to_string(),
                r.g1.len().to_string(),
                r.g2.len().to_string(),
                r.g3.len().to_string(),
            ])
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Report::Csv {
        header: vec!["group", "order", "g1", "g2", "g3"],
        rows,
    }
    .into())
}

pub fn dispatch(ctx: &Ctx<'_>, c: &Command) -> anyhow::Result<Outcome> {
    match c {
        Command::Cover(a) => cover(ctx, a),
        Command::Spectrum(a) => spectrum(ctx, a),
        Command::Width(a) => width(ctx, a),
        Command::LemmaCheck(a) => lemma_check(ctx, a),
        Command::Qsimple(a) => qsimple(ctx, a),
        Command::Filterbase(a) => filterbase(ctx, a),
        Command::Alpha(a) => alpha_cmd(ctx, a),
        Command::Density(a) => density(ctx, a),
        Command::Residuals(a) => residuals(ctx, a),
    }
}
