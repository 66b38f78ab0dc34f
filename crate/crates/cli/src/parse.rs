//! Command-line spellings of groups, subgroups and cochains.
//!
//! * groups: `preset:cyclic:4`, `preset:dihedral:4`, `preset:sym:3`,
//!   `preset:q8`, products joined by `x` (`preset:cyclic:2xcyclic:2`), or a
//!   group JSON file (`file:g.json`, or any path ending in `.json`);
//! * subgroups: `trivial`, `whole`, `gens:(12),(123)` (element labels),
//!   `idx:0,3` (element indices), or `file:h.json` (sorted index array);
//! * 3-cocycles: `trivial`, `preset:n:q` on the cyclic group of order `n`,
//!   or `file:w.json`;
//! * 2-cochains on a subgroup: `trivial`, `solve`, `solve:i` (the `i`-th
//!   class of solutions of `dψ = ω|_H`), or `file:psi.json`.

use std::fs;

use gtcat_core::cochain::{preset_omega_cyclic, restrict, solve_d2_equals, Cochain};
use gtcat_core::group::{preset_group, subgroup_closure, FiniteGroup, Preset, Subgroup};

use crate::json;
use crate::CliError;

fn read_json(path: &str) -> Result<serde_json::Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Domain(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("{path} is not valid JSON: {e}")))
}

fn file_path(spec: &str) -> Option<&str> {
    spec.strip_prefix("file:").or_else(|| spec.ends_with(".json").then_some(spec))
}

fn parse_usize(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("expected a number for {what}, got '{s}'")))
}

fn parse_preset(s: &str) -> Result<Preset, CliError> {
    let factors: Vec<&str> = s.split('x').collect();
    let mut presets = factors.iter().map(|f| parse_factor(f)).collect::<Result<Vec<_>, _>>()?;
    let mut acc = presets.remove(0);
    for p in presets {
        acc = Preset::DirectProduct(Box::new(acc), Box::new(p));
    }
    Ok(acc)
}

fn parse_factor(s: &str) -> Result<Preset, CliError> {
    let mut parts = s.split(':');
    let family = parts.next().unwrap_or_default();
    let arg = parts.next();
    let n = |name: &str| -> Result<usize, CliError> {
        parse_usize(arg.ok_or_else(|| CliError::Usage(format!("preset {name} needs a size")))?, name)
    };
    Ok(match family {
        "cyclic" | "cyc" | "z" => Preset::Cyclic(n("cyclic")?),
        "dihedral" | "dih" | "d" => Preset::Dihedral(n("dihedral")?),
        "sym" | "symmetric" | "s" => Preset::Symmetric(n("sym")?),
        "q8" | "quaternion" => Preset::Quaternion8,
        "klein" => Preset::DirectProduct(Box::new(Preset::Cyclic(2)), Box::new(Preset::Cyclic(2))),
        other => return Err(CliError::Usage(format!("unknown preset family '{other}'"))),
    })
}

pub fn group(spec: &str, bound: usize) -> Result<FiniteGroup, CliError> {
    if let Some(rest) = spec.strip_prefix("preset:") {
        return Ok(preset_group(&parse_preset(rest)?, bound)?);
    }
    if let Some(path) = file_path(spec) {
        let g = json::group_from_json(&read_json(path)?)?;
        if g.order() > bound {
            return Err(gtcat_core::Error::OrderTooLarge { order: g.order(), bound }.into());
        }
        return Ok(g);
    }
    Err(CliError::Usage(format!("cannot parse group '{spec}'")))
}

/// Splits at commas that are not inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|p| !p.is_empty()).collect()
}

pub fn subgroup(g: &FiniteGroup, spec: &str) -> Result<Subgroup, CliError> {
    match spec {
        "trivial" => return Ok(Subgroup::trivial(g)),
        "whole" => return Ok(Subgroup::whole(g)),
        _ => {}
    }
    if let Some(list) = spec.strip_prefix("gens:") {
        let gens = split_top_level(list)
            .into_iter()
            .map(|l| g.find_label(l).ok_or_else(|| CliError::Domain(format!("no element labelled '{l}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(subgroup_closure(g, &gens)?);
    }
    if let Some(list) = spec.strip_prefix("idx:") {
        let idx = list.split(',').filter(|p| !p.trim().is_empty()).map(|p| parse_usize(p, "element index")).collect::<Result<Vec<_>, _>>()?;
        return Ok(Subgroup::from_elements(g, idx)?);
    }
    if let Some(path) = file_path(spec) {
        return json::subgroup_from_json(g, &read_json(path)?);
    }
    Err(CliError::Usage(format!("cannot parse subgroup '{spec}'")))
}

pub fn omega(g: &FiniteGroup, spec: &str) -> Result<Cochain, CliError> {
    if spec == "trivial" {
        return Ok(Cochain::zero(3, g.order(), 1));
    }
    if let Some(rest) = spec.strip_prefix("preset:") {
        let (n, q) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Usage("preset omega is written preset:n:q".into()))?;
        let (n, q) = (parse_usize(n, "n")?, parse_usize(q, "q")?);
        let is_standard_cyclic = g.order() == n && (0..n).all(|a| (0..n).all(|b| g.mul(a, b) == (a + b) % n));
        if !is_standard_cyclic {
            return Err(CliError::Domain(format!("preset:{n}:{q} needs the group preset:cyclic:{n}")));
        }
        return Ok(preset_omega_cyclic(n, q)?);
    }
    if let Some(path) = file_path(spec) {
        let c = json::cochain_from_json(g, &read_json(path)?)?;
        if c.degree() != 3 {
            return Err(CliError::Domain("omega must have degree 3".into()));
        }
        return Ok(c);
    }
    Err(CliError::Usage(format!("cannot parse omega '{spec}'")))
}

/// A 2-cochain `ψ` on `H` (local indices) meant to satisfy `dψ = ω|_H`.
pub fn psi(g: &FiniteGroup, omega: &Cochain, h: &Subgroup, spec: &str) -> Result<Cochain, CliError> {
    let hg = h.to_group(g)?;
    if spec == "trivial" {
        return Ok(Cochain::zero(2, h.order(), 1));
    }
    if spec == "solve" || spec.starts_with("solve:") {
        let i = match spec.strip_prefix("solve:") {
            Some(i) => parse_usize(i, "solution class")?,
            None => 0,
        };
        let target = restrict(g, omega, h)?;
        let m = omega.modulus() * h.order() as u64;
        let sol = solve_d2_equals(&hg, &target, m)?
            .ok_or_else(|| CliError::Domain("d(psi) = omega|_H has no solution".into()))?;
        let t = sol.h2_transversal.get(i).ok_or_else(|| {
            CliError::Domain(format!("only {} solution classes, index {i} requested", sol.h2_transversal.len()))
        })?;
        return Ok(sol.particular.add(t)?);
    }
    if let Some(path) = file_path(spec) {
        return json::cochain_from_json(&hg, &read_json(path)?);
    }
    Err(CliError::Usage(format!("cannot parse 2-cochain '{spec}'")))
}

/// Any cochain given as `trivial:<degree>` or a JSON file.
pub fn cochain(g: &FiniteGroup, spec: &str) -> Result<Cochain, CliError> {
    if let Some(d) = spec.strip_prefix("trivial:") {
        return Ok(Cochain::zero(parse_usize(d, "degree")?, g.order(), 1));
    }
    if let Some(rest) = spec.strip_prefix("preset:") {
        return omega(g, &format!("preset:{rest}"));
    }
    if let Some(path) = file_path(spec) {
        return json::cochain_from_json(g, &read_json(path)?);
    }
    Err(CliError::Usage(format!("cannot parse cochain '{spec}'")))
}
