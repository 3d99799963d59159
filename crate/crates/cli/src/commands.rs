use std::io::Write;
use std::sync::Arc;

use anyhow::{bail, Result};
use serde_json::{json, Value};

use typeb_core::canonical::{
    canonical_basis_with, charge_from, decomposition_matrix, gamma_table, StringPolicy,
};
use typeb_core::cells::{cell_datum, cells, cellularity_check, conjecture_a_report, Side};
use typeb_core::combinat::{core_and_quotient, enumerate_bipartitions, q_r, q_r_inverse};
use typeb_core::crystal::{
    crystal_e, crystal_f, crystal_graph, flotw_oracle, signature_word, uglov_bipartitions,
};
use typeb_core::domino::{insert, qtilde_r, verify_insertion_bijection};
use typeb_core::hecke::kl_basis;
use typeb_core::orders::{dominance_r, hasse};
use typeb_core::specht::{theorem41_check, CheckStatus, CycloSpecialization, SpechtData};
use typeb_core::{Bounds, Error};

use crate::output::{json_document, unsupported, Format};
use crate::{
    CanbasisArgs, CellsArgs, ChargeOnlyArgs, Command, CrystalArgs, DecmatArgs, GammaArgs,
    InsertArgs, KlArgs, OrderArgs, Policy, QuotientArgs, SpechtArgs, Status, Theorem41Args,
    UglovArgs, UsageError,
};

pub fn dispatch(
    command: Command,
    format: Format,
    bounds: &Bounds,
    out: &mut impl Write,
) -> Result<Status> {
    let (text, status) = match command {
        Command::Bip { n } => (bip(n, format)?, Status::Ok),
        Command::Quotient(a) => (quotient(&a, format)?, Status::Ok),
        Command::Order(a) => (order(&a, format, bounds)?, Status::Ok),
        Command::Insert(a) => insert_cmd(&a, format, bounds)?,
        Command::Klbasis(a) => (klbasis(&a, format, bounds)?, Status::Ok),
        Command::Cells(a) => (cells_cmd(&a, format, bounds)?, Status::Ok),
        Command::CheckConjA(a) => check_conj_a(&a, format, bounds)?,
        Command::CheckCellular(a) => check_cellular(&a, format, bounds)?,
        Command::Crystal(a) => (crystal(&a, format, bounds)?, Status::Ok),
        Command::Uglov(a) => uglov(&a, format, bounds)?,
        Command::Canbasis(a) => (canbasis(&a, format, bounds)?, Status::Ok),
        Command::Decmat(a) => (decmat(&a, format, bounds)?, Status::Ok),
        Command::Charge(a) => (charge(&a, format)?, Status::Ok),
        Command::Gamma(a) => (gamma_cmd(&a, format, bounds)?, Status::Ok),
        Command::Theorem41(a) => theorem41(&a, format, bounds)?,
        Command::Specht(a) => (specht(&a, format, bounds)?, Status::Ok),
    };
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(status)
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn lines<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| format!("{}\n", x.to_string()))
        .collect()
}

fn bip(n: usize, format: Format) -> Result<String> {
    let all = enumerate_bipartitions(n);
    match format {
        Format::Text => Ok(lines(&all)),
        Format::Json => Ok(json_document("bip", json!({ "n": n, "bipartitions": all }))),
        f => Err(unsupported("bip", f)),
    }
}

fn quotient(a: &QuotientArgs, format: Format) -> Result<String> {
    let (partition, bipartition, core) = match (&a.partition, &a.bipartition) {
        (Some(p), _) => {
            let b = q_r(p, a.r)?;
            (p.clone(), b, core_and_quotient(p).0)
        }
        (None, Some(b)) => {
            let p = q_r_inverse(b, a.r);
            let core = core_and_quotient(&p).0;
            (p, b.clone(), core)
        }
        (None, None) => bail!(UsageError("give --partition or --bipartition".into())),
    };
    match format {
        Format::Text => Ok(format!(
            "partition: {partition}\ncore: {core}\nquotient: {bipartition}\n"
        )),
        Format::Json => Ok(json_document(
            "quotient",
            json!({
                "r": a.r,
                "partition": partition.to_string(),
                "core": core.to_string(),
                "quotient": bipartition,
            }),
        )),
        f => Err(unsupported("quotient", f)),
    }
}

fn order(a: &OrderArgs, format: Format, bounds: &Bounds) -> Result<String> {
    if let Some(pair) = &a.compare {
        let (x, y) = (&pair[0], &pair[1]);
        let le = dominance_r(x, y, a.r)?;
        let ge = dominance_r(y, x, a.r)?;
        return match format {
            Format::Text => Ok(format!(
                "{x} ⊴_{} {y}: {le}\n{y} ⊴_{} {x}: {ge}\n",
                a.r, a.r
            )),
            Format::Json => Ok(json_document(
                "order",
                json!({ "r": a.r.to_string(), "a": x, "b": y, "a_below_b": le, "b_below_a": ge }),
            )),
            f => Err(unsupported("order --compare", f)),
        };
    }
    let Some(n) = a.n else {
        bail!(UsageError("order needs --n or --compare".into()));
    };
    let h = hasse(n, a.r, bounds)?;
    match format {
        Format::Text => Ok(h.to_text()),
        Format::Dot => Ok(h.to_dot()),
        Format::Json => {
            let edges: Vec<Value> = h
                .edges
                .iter()
                .map(|&(big, small)| json!([h.vertices[big], h.vertices[small]]))
                .collect();
            let chain = h.as_chain().map(|c| strings(&c));
            Ok(json_document(
                "order",
                json!({
                    "n": n,
                    "r": a.r.to_string(),
                    "vertices": h.vertices,
                    "edges": edges,
                    "chain": chain,
                }),
            ))
        }
        f => Err(unsupported("order", f)),
    }
}

fn insert_cmd(a: &InsertArgs, format: Format, bounds: &Bounds) -> Result<(String, Status)> {
    if a.verify {
        let n = a.n.expect("clap enforces --n with --verify");
        let rep = verify_insertion_bijection(n, a.r, bounds)?;
        let status = if rep.passed() {
            Status::Ok
        } else {
            Status::CheckFailed
        };
        let text = match format {
            Format::Text => {
                let mut s = format!(
                    "n = {}, r = {}: {} elements\nbijective: {}\nsymmetric: {}\ndiagram commutes: {}\n",
                    rep.n, rep.r, rep.elements, rep.bijective, rep.symmetric, rep.diagram_commutes
                );
                for f in &rep.failures {
                    s.push_str(&format!("failure: {f}\n"));
                }
                s
            }
            Format::Json => json_document("insert", serde_json::to_value(&rep)?),
            f => return Err(unsupported("insert --verify", f)),
        };
        return Ok((text, status));
    }
    let w = a.w.as_ref().expect("clap enforces --w without --verify");
    let (p, q) = insert(w, a.r)?;
    let s = qtilde_r(&p)?;
    let t = qtilde_r(&q)?;
    let lambda = s.shape();
    let text = match format {
        Format::Text => format!(
            "P:\n{}Q:\n{}S = {s}\nT = {t}\nλ = {lambda}\n",
            p.render(),
            q.render()
        ),
        Format::Json => json_document(
            "insert",
            json!({
                "w": w,
                "r": a.r.to_string(),
                "p": p.render(),
                "q": q.render(),
                "s": s,
                "t": t,
                "lambda": lambda,
            }),
        ),
        f => return Err(unsupported("insert", f)),
    };
    Ok((text, Status::Ok))
}

fn klbasis(a: &KlArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let xi = a.xi.resolve()?;
    let b = kl_basis(a.xi.n, xi, bounds)?;
    let g = b.group();
    let label = |w: usize| format!("[{}]", g.element(w));
    match format {
        Format::Text => {
            let mut s = format!("ξ = {xi}\n");
            for (w, c) in b.elements().iter().enumerate() {
                s.push_str(&format!("C{} = {}\n", label(w), b.algebra().format(c)));
            }
            Ok(s)
        }
        Format::Json => {
            let elements: Vec<Value> = b
                .elements()
                .iter()
                .enumerate()
                .map(|(w, c)| {
                    json!({
                        "w": g.element(w),
                        "length": g.length(w),
                        "c": b.algebra().format(c),
                    })
                })
                .collect();
            Ok(json_document(
                "klbasis",
                json!({ "n": a.xi.n, "xi": xi.to_string(), "elements": elements }),
            ))
        }
        f => Err(unsupported("klbasis", f)),
    }
}

fn cells_cmd(a: &CellsArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let xi = a.xi.resolve()?;
    let b = kl_basis(a.xi.n, xi, bounds)?;
    let part = cells(&b, a.side);
    let g = b.group();
    let classes: Vec<Vec<String>> = part
        .classes
        .iter()
        .map(|c| c.iter().map(|&w| format!("[{}]", g.element(w))).collect())
        .collect();
    let side = match a.side {
        Side::Left => "left",
        Side::Right => "right",
        Side::TwoSided => "two-sided",
    };
    match format {
        Format::Text => {
            let mut s = format!("ξ = {xi}, {side} cells: {}\n", classes.len());
            for (i, c) in classes.iter().enumerate() {
                s.push_str(&format!("{i}: {}\n", c.join(" ")));
            }
            Ok(s)
        }
        Format::Dot => {
            let mut s = String::from("digraph cells {\n  rankdir=TB;\n");
            for (i, c) in classes.iter().enumerate() {
                s.push_str(&format!("  c{i} [label=\"{}\"];\n", c.join(" ")));
            }
            for (i, row) in part.below.iter().enumerate() {
                for (j, &le) in row.iter().enumerate() {
                    let covered = le
                        && i != j
                        && !(0..row.len())
                            .any(|k| k != i && k != j && part.below[i][k] && part.below[k][j]);
                    if covered {
                        s.push_str(&format!("  c{j} -> c{i};\n"));
                    }
                }
            }
            s.push_str("}\n");
            Ok(s)
        }
        Format::Json => Ok(json_document(
            "cells",
            json!({
                "n": a.xi.n,
                "xi": xi.to_string(),
                "side": side,
                "cells": classes,
                "below": part.below,
            }),
        )),
        f => Err(unsupported("cells", f)),
    }
}

fn check_conj_a(a: &KlArgs, format: Format, bounds: &Bounds) -> Result<(String, Status)> {
    let xi = a.xi.resolve()?;
    let b = kl_basis(a.xi.n, xi, bounds)?;
    let rep = conjecture_a_report(&b)?;
    let status = if rep.passed() {
        Status::Ok
    } else {
        Status::CheckFailed
    };
    let text = match format {
        Format::Text => {
            let mut s = format!("n = {}, ξ = {}, r = {}\n", rep.n, rep.xi, rep.r);
            for c in &rep.clauses {
                s.push_str(&format!(
                    "{} {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.clause
                ));
                if let Some(x) = &c.counterexample {
                    s.push_str(&format!("  {x}\n"));
                }
            }
            s
        }
        Format::Json => json_document("check-conj-a", serde_json::to_value(&rep)?),
        f => return Err(unsupported("check-conj-a", f)),
    };
    Ok((text, status))
}

fn check_cellular(a: &KlArgs, format: Format, bounds: &Bounds) -> Result<(String, Status)> {
    let xi = a.xi.resolve()?;
    let b = Arc::new(kl_basis(a.xi.n, xi, bounds)?);
    let datum = match cell_datum(b) {
        Ok(d) => d,
        Err(Error::ConjectureAViolation(msg)) => {
            let text = match format {
                Format::Text => format!("FAIL no cell datum: {msg}\n"),
                Format::Json => json_document(
                    "check-cellular",
                    json!({ "n": a.xi.n, "xi": xi.to_string(), "passed": false, "failures": [msg] }),
                ),
                f => return Err(unsupported("check-cellular", f)),
            };
            return Ok((text, Status::CheckFailed));
        }
        Err(e) => return Err(e.into()),
    };
    let rep = cellularity_check(&datum);
    let status = if rep.passed() {
        Status::Ok
    } else {
        Status::CheckFailed
    };
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "n = {}, ξ = {}, r = {}\n{} cellular axiom\n{} (C_ST)* = C_TS\n",
                rep.n,
                rep.xi,
                rep.r,
                if rep.axiom_holds { "PASS" } else { "FAIL" },
                if rep.star_compatible { "PASS" } else { "FAIL" },
            );
            for f in &rep.failures {
                s.push_str(&format!("  {f}\n"));
            }
            s
        }
        Format::Json => json_document("check-cellular", serde_json::to_value(&rep)?),
        f => return Err(unsupported("check-cellular", f)),
    };
    Ok((text, status))
}

fn crystal(a: &CrystalArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let s = a.charge.resolve()?;
    let e = a.charge.e;
    if let Some(lambda) = &a.node {
        let mut rows = Vec::new();
        for i in 0..e {
            let sig = signature_word(lambda, i, s, e)?;
            rows.push((
                i,
                sig.word_string(),
                sig.reduced_string(),
                sig.epsilon(),
                sig.phi(),
                crystal_e(lambda, i, s, e)?,
                crystal_f(lambda, i, s, e)?,
            ));
        }
        let show = |b: &Option<_>| match b {
            Some(b) => format!("{b}"),
            None => "0".to_string(),
        };
        return match format {
            Format::Text => {
                let mut out = format!("{lambda} at s = {s}, e = {e}\n");
                for (i, w, red, eps, phi, up, down) in &rows {
                    out.push_str(&format!(
                        "i = {i}: word {w:?} reduced {red:?} ε = {eps} φ = {phi} ẽ = {} f̃ = {}\n",
                        show(up),
                        show(down)
                    ));
                }
                Ok(out)
            }
            Format::Json => {
                let items: Vec<Value> = rows
                    .iter()
                    .map(|(i, w, red, eps, phi, up, down)| {
                        json!({
                            "i": i,
                            "word": w,
                            "reduced": red,
                            "epsilon": eps,
                            "phi": phi,
                            "e": up,
                            "f": down,
                        })
                    })
                    .collect();
                Ok(json_document(
                    "crystal",
                    json!({ "charge": s.to_string(), "e": e, "node": lambda, "signatures": items }),
                ))
            }
            f => Err(unsupported("crystal --node", f)),
        };
    }
    let n = a.n.expect("clap enforces --n without --node");
    let g = crystal_graph(s, e, n, bounds)?;
    match format {
        Format::Text => Ok(g.to_text()),
        Format::Dot => Ok(g.to_dot()),
        Format::Json => Ok(json_document("crystal", serde_json::to_value(&g)?)),
        f => Err(unsupported("crystal", f)),
    }
}

fn uglov(a: &UglovArgs, format: Format, bounds: &Bounds) -> Result<(String, Status)> {
    let s = a.charge.resolve()?;
    let e = a.charge.e;
    let set = uglov_bipartitions(a.n, s, e, bounds)?;
    // None when the charge is outside the range of the closed form.
    let mut mismatches = Some(Vec::new());
    if a.flotw {
        for lambda in enumerate_bipartitions(a.n) {
            match flotw_oracle(&lambda, s, e) {
                Ok(inside) if inside != set.contains(&lambda) => {
                    if let Some(m) = mismatches.as_mut() {
                        m.push(lambda)
                    }
                }
                Ok(_) => {}
                Err(Error::ChargeOutOfRange(..)) => mismatches = None,
                Err(err) => return Err(err.into()),
            }
        }
    }
    let status = match &mismatches {
        Some(m) if !m.is_empty() => Status::CheckFailed,
        _ => Status::Ok,
    };
    let text = match format {
        Format::Text => {
            let mut out = lines(&set);
            if a.flotw {
                out.push_str(&match &mismatches {
                    None => "FLOTW: not applicable, needs 0 <= s1 - s0 < e\n".to_string(),
                    Some(m) if m.is_empty() => "FLOTW: agrees\n".to_string(),
                    Some(m) => format!("FLOTW: differs at {}\n", strings(m).join(" ")),
                });
            }
            out
        }
        Format::Json => json_document(
            "uglov",
            json!({
                "n": a.n,
                "charge": s.to_string(),
                "e": e,
                "bipartitions": set,
                "flotw_mismatches": if a.flotw { mismatches } else { None },
            }),
        ),
        f => return Err(unsupported("uglov", f)),
    };
    Ok((text, status))
}

fn canbasis(a: &CanbasisArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let s = a.charge.resolve()?;
    let e = a.charge.e;
    let policy = match a.policy {
        Policy::Smallest => StringPolicy::SmallestResidue,
        Policy::Largest => StringPolicy::LargestResidue,
    };
    let basis = canonical_basis_with(a.n, s, e, policy, bounds)?;
    match format {
        Format::Text => Ok(basis
            .iter()
            .map(|g| format!("G({}) = {}\n", g.index, g.vector))
            .collect()),
        Format::Json => Ok(json_document(
            "canbasis",
            json!({ "n": a.n, "charge": s.to_string(), "e": e, "basis": basis }),
        )),
        f => Err(unsupported("canbasis", f)),
    }
}

fn decmat(a: &DecmatArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let s = a.charge.resolve()?;
    let m = decomposition_matrix(a.n, s, a.charge.e, bounds)?;
    match format {
        Format::Tsv | Format::Text => Ok(m.to_tsv(a.at_one)),
        Format::Json => {
            let entries: Value = if a.at_one {
                json!(m.at_one())
            } else {
                json!(m.entries.iter().map(|row| strings(row)).collect::<Vec<_>>())
            };
            Ok(json_document(
                "decmat",
                json!({
                    "n": a.n,
                    "charge": s.to_string(),
                    "e": m.e,
                    "rows": m.rows,
                    "columns": m.columns,
                    "entries": entries,
                }),
            ))
        }
        f => Err(unsupported("decmat", f)),
    }
}

fn charge(a: &ChargeOnlyArgs, format: Format) -> Result<String> {
    if a.e == 0 {
        bail!(UsageError("--e must be positive".into()));
    }
    let s = charge_from(a.r, a.d, a.e);
    match format {
        Format::Text => Ok(format!("{s}\n")),
        Format::Json => Ok(json_document(
            "charge",
            json!({ "r": a.r, "d": a.d, "e": a.e, "charge": s.to_string() }),
        )),
        f => Err(unsupported("charge", f)),
    }
}

fn gamma_cmd(a: &GammaArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let table = gamma_table(a.n, a.charge, a.target, a.e, bounds)?;
    match format {
        Format::Text => Ok(table.iter().map(|(m, g)| format!("{m} -> {g}\n")).collect()),
        Format::Json => {
            let pairs: Vec<Value> = table.iter().map(|(m, g)| json!([m, g])).collect();
            Ok(json_document(
                "gamma",
                json!({
                    "n": a.n,
                    "from": a.charge.to_string(),
                    "to": a.target.to_string(),
                    "e": a.e,
                    "map": pairs,
                }),
            ))
        }
        f => Err(unsupported("gamma", f)),
    }
}

fn theorem41(a: &Theorem41Args, format: Format, bounds: &Bounds) -> Result<(String, Status)> {
    let rep = theorem41_check(a.n, a.e, a.d, a.r, bounds)?;
    // A blocked check could not be carried out; it is reported, not failed.
    let status = if rep.status == CheckStatus::Fail {
        Status::CheckFailed
    } else {
        Status::Ok
    };
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "n = {}, e = {}, d = {}, r = {}, ξ = {}, s = {}: {}\n",
                rep.n, rep.e, rep.d, rep.r, rep.xi, rep.charge, rep.status
            );
            s.push_str(&format!("simples: {}\n", strings(&rep.simples).join(" ")));
            s.push_str(&format!("uglov:   {}\n", strings(&rep.uglov).join(" ")));
            s.push_str(&format!(
                "simples match: {}\ndecomposition numbers match: {}\n",
                rep.simples_match, rep.matrices_match
            ));
            if let Some(d) = &rep.detail {
                s.push_str(&format!("detail: {d}\n"));
            }
            s.push_str(&format!("assumption: {}\n", rep.assumption));
            s
        }
        Format::Tsv => match &rep.decomposition_numbers {
            Some(d) => d.to_tsv(),
            None => String::new(),
        },
        Format::Json => json_document("theorem41", serde_json::to_value(&rep)?),
        f => return Err(unsupported("theorem41", f)),
    };
    Ok((text, status))
}

fn specht(a: &SpechtArgs, format: Format, bounds: &Bounds) -> Result<String> {
    let xi = a.xi.resolve()?;
    let data = SpechtData::new(a.xi.n, xi, bounds)?;
    let spec = match a.e {
        Some(0) => bail!(UsageError("--e must be positive".into())),
        Some(e) => CycloSpecialization::root_of_unity(e, a.d.unwrap_or(0)),
        None => CycloSpecialization::generic(),
    };
    let modules: Vec<(String, usize, usize, bool)> = data
        .modules()
        .iter()
        .map(|m| {
            let sm = m.specialize(&spec);
            (
                m.shape.to_string(),
                m.dim(),
                sm.gram_rank(),
                m.adjointness_holds(),
            )
        })
        .collect();
    let dn = data.decomposition_numbers(&spec)?;
    match format {
        Format::Text => {
            let mut s = format!("ξ = {xi}, {spec}\n");
            for (shape, dim, rank, adj) in &modules {
                s.push_str(&format!(
                    "S{shape}: dim {dim}, rank of form {rank}, adjoint {adj}\n"
                ));
            }
            s.push_str(&format!("nonzero D: {}\n", strings(&dn.columns).join(" ")));
            s.push_str(&dn.to_tsv());
            Ok(s)
        }
        Format::Tsv => Ok(dn.to_tsv()),
        Format::Json => {
            let ms: Vec<Value> = modules
                .iter()
                .map(|(shape, dim, rank, adj)| {
                    json!({ "shape": shape, "dim": dim, "gram_rank": rank, "adjoint": adj })
                })
                .collect();
            Ok(json_document(
                "specht",
                json!({
                    "n": a.xi.n,
                    "xi": xi.to_string(),
                    "specialization": spec.to_string(),
                    "modules": ms,
                    "decomposition_numbers": dn,
                    "assumption": typeb_core::specht::CELL_MODULE_ASSUMPTION,
                }),
            ))
        }
        f => Err(unsupported("specht", f)),
    }
}
