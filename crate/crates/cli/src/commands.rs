//! Subcommand implementations.

use gentle_core::algebra::{parse_bound_quiver, validate_gentle, GentleAlgebra};
use gentle_core::ar;
use gentle_core::error::{DomainError, Error};
use gentle_core::homext;
use gentle_core::invariants::{cluster_character, f_polynomial, g_vector, g_vector_homological};
use gentle_core::modules::{self, ModuleSum};
use gentle_core::multiplication;
use gentle_core::oracle;
use gentle_core::poly::{LaurentCC, YPolynomial};
use gentle_core::typeb;

fn read(file: &str) -> Result<String, Error> {
    std::fs::read_to_string(file)
        .map_err(|e| DomainError::Other(format!("cannot read {file}: {e}")).into())
}

/// Load an algebra; files emitted by `gentle polygon` carry a marker
/// comment that tags them as triangulation algebras.
pub fn load_algebra(file: &str) -> Result<GentleAlgebra, Error> {
    let text = read(file)?;
    let mut alg = gentle_core::algebra::parse_algebra(&text)?;
    if text.contains("# gentle-polygon") {
        alg.from_triangulation = true;
    }
    Ok(alg)
}

fn vertex_names(alg: &GentleAlgebra) -> Vec<String> {
    alg.quiver().vertex_names().to_vec()
}

fn ypoly_json(alg: &GentleAlgebra, p: &YPolynomial) -> serde_json::Value {
    serde_json::json!({
        "vars": vertex_names(alg),
        "terms": p.ordered_terms().iter().map(|(e, c)| serde_json::json!({"e": e, "c": c})).collect::<Vec<_>>(),
    })
}

fn laurent_json(alg: &GentleAlgebra, p: &LaurentCC) -> serde_json::Value {
    serde_json::json!({
        "vars": vertex_names(alg),
        "terms": p.terms().map(|((x, y), c)| serde_json::json!({"x": x, "y": y, "c": c})).collect::<Vec<_>>(),
    })
}

pub fn validate(file: &str) -> Result<(), Error> {
    let text = read(file)?;
    let spec = parse_bound_quiver(&text)?;
    let report = validate_gentle(&spec);
    if report.is_empty() {
        println!("gentle");
        Ok(())
    } else {
        for v in &report {
            println!("{v}");
        }
        Err(DomainError::NotGentle(report).into())
    }
}

pub fn fpoly(file: &str, module: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let m = modules::parse_module_sum(&alg, module)?;
    let f = f_polynomial(&alg, &m);
    if format == "json" {
        println!("{}", ypoly_json(&alg, &f));
    } else {
        println!("{}", f.render(&vertex_names(&alg)));
    }
    Ok(())
}

pub fn gvec(file: &str, module: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let m = modules::parse_module_sum(&alg, module)?;
    let g = g_vector(&alg, &m);
    let gh = g_vector_homological(&alg, &m);
    if g != gh {
        return Err(DomainError::Other(format!(
            "combinatorial and homological g-vectors disagree: {g:?} vs {gh:?}"
        ))
        .into());
    }
    if format == "json" {
        println!("{}", serde_json::json!({ "g": g }));
    } else {
        println!("({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    }
    Ok(())
}

pub fn cc(file: &str, module: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let m = modules::parse_module_sum(&alg, module)?;
    let c = cluster_character(&alg, &m);
    if format == "json" {
        println!("{}", laurent_json(&alg, &c));
    } else {
        println!("{}", c.render(&vertex_names(&alg)));
    }
    Ok(())
}

pub fn tau_cmd(file: &str, module: &str, inverse: bool, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let m = modules::parse_module_sum(&alg, module)?;
    let t = if inverse { ar::tau_inv_sum(&alg, &m) } else { ar::tau_sum(&alg, &m) };
    if format == "json" {
        println!(
            "{}",
            serde_json::json!({
                "module": modules::module_expr(&alg, &t),
                "pretty": modules::pretty(&alg, &t),
            })
        );
    } else {
        println!("{}  [{}]", modules::pretty(&alg, &t), modules::module_expr(&alg, &t));
    }
    Ok(())
}

pub fn ar_seq(file: &str, module: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let m = modules::parse_module_sum(&alg, module)?;
    if m.summands().len() != 1 {
        return Err(DomainError::Other("AR sequences need an indecomposable module".into()).into());
    }
    let seq = ar::ar_sequence(&alg, &m.summands()[0])?;
    let left = ModuleSum::from_module(seq.left.clone());
    let right = ModuleSum::from_module(seq.right.clone());
    if format == "json" {
        println!(
            "{}",
            serde_json::json!({
                "left": modules::module_expr(&alg, &left),
                "middle": modules::module_expr(&alg, &seq.middle),
                "right": modules::module_expr(&alg, &right),
            })
        );
    } else {
        println!(
            "0 -> {} -> {} -> {} -> 0",
            modules::pretty(&alg, &left),
            modules::pretty(&alg, &seq.middle),
            modules::pretty(&alg, &right)
        );
    }
    Ok(())
}

pub fn hom(file: &str, from: &str, to: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let x = modules::parse_module_sum(&alg, from)?;
    let y = modules::parse_module_sum(&alg, to)?;
    let d = homext::hom_dim(&alg, &x, &y);
    let o = homext::hom_dim_oracle(&alg, &x, &y);
    if d != o {
        return Err(DomainError::Other(format!(
            "combinatorial Hom {d} disagrees with the linear oracle {o}"
        ))
        .into());
    }
    if format == "json" {
        println!("{}", serde_json::json!({ "dim": d }));
    } else {
        println!("{d}");
    }
    Ok(())
}

pub fn ext(file: &str, from: &str, to: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let s = modules::parse_module_sum(&alg, from)?;
    let x = modules::parse_module_sum(&alg, to)?;
    let basis = homext::ext_basis(&alg, &s, &x)?;
    let oracle_dim = homext::ext_dim_oracle(&alg, &s, &x);
    if basis.len() != oracle_dim {
        return Err(DomainError::Other(format!(
            "basis size {} disagrees with the linear oracle {}",
            basis.len(),
            oracle_dim
        ))
        .into());
    }
    if format == "json" {
        let items: Vec<serde_json::Value> = basis
            .iter()
            .map(|cls| {
                let kind = match &cls.kind {
                    homext::ExtKind::Arrow { arrow } => serde_json::json!({
                        "kind": "arrow",
                        "arrow": alg.quiver().arrow(*arrow).name,
                    }),
                    homext::ExtKind::Overlap(o) => serde_json::json!({
                        "kind": "overlap",
                        "m": gentle_core::strings::display_word(&alg, &o.m),
                        "w_range": [o.w_range.0, o.w_range.1],
                        "v_range": [o.v_range.0, o.v_range.1],
                        "a": o.a.map(|a| alg.quiver().arrow(a).name.clone()),
                        "b": o.b.map(|a| alg.quiver().arrow(a).name.clone()),
                        "c": o.c.map(|a| alg.quiver().arrow(a).name.clone()),
                        "d": o.d.map(|a| alg.quiver().arrow(a).name.clone()),
                    }),
                };
                serde_json::json!({
                    "class": kind,
                    "middle": modules::module_expr(&alg, &cls.middle),
                    "middle_pretty": modules::pretty(&alg, &cls.middle),
                })
            })
            .collect();
        println!("{}", serde_json::json!({ "dim": basis.len(), "basis": items }));
    } else {
        println!("dim Ext^1 = {}", basis.len());
        for (k, cls) in basis.iter().enumerate() {
            match &cls.kind {
                homext::ExtKind::Arrow { arrow } => println!(
                    "  [{k}] arrow extension via {}  middle {}",
                    alg.quiver().arrow(*arrow).name,
                    modules::pretty(&alg, &cls.middle)
                ),
                homext::ExtKind::Overlap(o) => println!(
                    "  [{k}] overlap extension, m = {}  middle {}",
                    gentle_core::strings::display_word(&alg, &o.m),
                    modules::pretty(&alg, &cls.middle)
                ),
            }
        }
    }
    Ok(())
}

pub fn multiply(file: &str, x: &str, s: &str, format: &str) -> Result<(), Error> {
    let alg = load_algebra(file)?;
    let xm = modules::parse_module_sum(&alg, x)?;
    let sm = modules::parse_module_sum(&alg, s)?;
    let report = multiplication::verify_decomposition(&alg, &xm, &sm)?;
    let data = &report.data;
    let names = vertex_names(&alg);
    let sunder = ModuleSum::from_module(gentle_core::modules::Module::String(data.sunder.clone()));
    let dim_su = modules::dim_vector(&alg, &sunder);
    let classification = multiplication::classify_sequence(&alg, &xm, &sm)?;
    let cc_rel = if data.added_arrows.is_empty() {
        Some(multiplication::cc_relation(&alg, &xm, &sm)?)
    } else {
        None
    };
    if format == "json" {
        let j = serde_json::json!({
            "xi_kind": match &data.xi.kind {
                homext::ExtKind::Arrow { arrow } => serde_json::json!({"arrow": alg.quiver().arrow(*arrow).name}),
                homext::ExtKind::Overlap(o) => serde_json::json!({"overlap_m": gentle_core::strings::display_word(&alg, &o.m)}),
            },
            "y": modules::module_expr(&alg, &data.y),
            "xbar": modules::module_expr(&alg, &data.xbar),
            "sunder": modules::module_expr(&alg, &sunder),
            "s_mod_sunder": modules::module_expr(&alg, &data.s_mod_sunder),
            "m": modules::module_expr(&data.host, &data.m),
            "added_arrows": data.added_arrows.iter().map(|(n, s, t)| {
                serde_json::json!({"name": n, "source": alg.quiver().vertex_name(*s), "target": alg.quiver().vertex_name(*t)})
            }).collect::<Vec<_>>(),
            "dim_sunder": dim_su,
            "f_identity_holds": report.holds,
            "f_lhs": ypoly_json(&alg, &report.lhs),
            "f_rhs": ypoly_json(&alg, &report.rhs),
            "cc_identity_holds": cc_rel.as_ref().map(|c| c.holds),
            "classification": classification.to_string(),
            "host_gentle": data.host.gentle,
            "m_rigid": data.m_rigid,
        });
        println!("{j}");
    } else {
        match &data.xi.kind {
            homext::ExtKind::Arrow { arrow } => {
                println!("xi: arrow extension via {}", alg.quiver().arrow(*arrow).name)
            }
            homext::ExtKind::Overlap(o) => println!(
                "xi: overlap extension, m = {}",
                gentle_core::strings::display_word(&alg, &o.m)
            ),
        }
        println!("Y        = {}", modules::pretty(&alg, &data.y));
        println!("Xbar     = {}", modules::pretty(&alg, &data.xbar));
        println!("Sunder   = {}", modules::pretty(&alg, &sunder));
        println!("S/Sunder = {}", modules::pretty(&alg, &data.s_mod_sunder));
        println!("M        = {}", modules::pretty(&data.host, &data.m));
        if data.added_arrows.is_empty() {
            println!("host     = original algebra");
        } else {
            for (n, src, tgt) in &data.added_arrows {
                println!(
                    "host    += arrow {n}: {} -> {} ({})",
                    alg.quiver().vertex_name(*src),
                    alg.quiver().vertex_name(*tgt),
                    if data.host.gentle { "still gentle" } else { "not a string algebra" }
                );
            }
        }
        println!("dim Sunder = ({})", dim_su.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        println!("F identity: F_X F_S = F_Y + y^dim(Sunder) F_M: {}", if report.holds { "holds" } else { "FAILS" });
        println!("  lhs = {}", report.lhs.render(&names));
        println!("  rhs = {}", report.rhs.render(&names));
        if let Some(c) = &cc_rel {
            println!(
                "CC identity: {} (x-corrections {:?} and {:?})",
                if c.holds { "holds" } else { "FAILS" },
                c.exp_y,
                c.exp_m
            );
        } else {
            println!("CC identity: skipped (extended host algebra)");
        }
        println!("classification: {classification}");
        if alg.from_triangulation {
            let diag = multiplication::is_exchange_relation(&alg, &xm, &sm)?;
            println!("exchange relation: {} ({})", diag.is_exchange, diag.reason);
        }
    }
    if !report.holds {
        return Err(DomainError::Other("decomposition identity failed".into()).into());
    }
    Ok(())
}

pub fn parse_diagonal_list(
    p: typeb::Polygon,
    text: &str,
) -> Result<Vec<typeb::Diagonal>, Error> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (a, b) = part
            .split_once('-')
            .ok_or_else(|| -> Error { DomainError::Other(format!("bad diagonal `{part}`")).into() })?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| -> Error { DomainError::Other(format!("bad vertex `{a}`")).into() })?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| -> Error { DomainError::Other(format!("bad vertex `{b}`")).into() })?;
        out.push(typeb::Diagonal::new(p, a, b)?);
    }
    Ok(out)
}

pub fn polygon_dsl(m: usize, diagonals: &str) -> Result<String, Error> {
    let p = typeb::Polygon::new(m)?;
    let ds = parse_diagonal_list(p, diagonals)?;
    let t = typeb::Triangulation::new(p, ds)?;
    let alg = typeb::triangulation_algebra(&t)?;
    let header = format!(
        "# gentle-polygon m={} diagonals={}\n",
        m,
        t.diagonals
            .iter()
            .map(|d| format!("{}-{}", d.a, d.b))
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(format!("{header}{}", alg.to_dsl()))
}

pub fn polygon(m: usize, diagonals: &str) -> Result<(), Error> {
    print!("{}", polygon_dsl(m, diagonals)?);
    Ok(())
}

pub fn typeb(
    m: usize,
    triangulation: &str,
    orbit: &str,
    orient_high: bool,
    format: &str,
) -> Result<(), Error> {
    let p = typeb::Polygon::new(m)?;
    let ds = parse_diagonal_list(p, triangulation)?;
    let t = typeb::Triangulation::new(p, ds)?;
    let ctx = typeb::TypeBContext::new(t, !orient_high)?;
    let reps = parse_diagonal_list(p, orbit)?;
    if reps.len() != 1 {
        return Err(DomainError::Other("--orbit takes a single vertex pair".into()).into());
    }
    let rep = reps[0];
    if ctx.orbit_in_t(rep) {
        return Err(DomainError::Other(
            "orbit lies in the triangulation: its variable is the initial one".into(),
        )
        .into());
    }
    let n_mod = ctx.orbit_module(rep)?;
    let (f, g, witness) = typeb::typeb_variable(&ctx, &n_mod)?;
    let names: Vec<String> = (1..=ctx.n).map(|i| i.to_string()).collect();
    if format == "json" {
        println!(
            "{}",
            serde_json::json!({
                "module": modules::module_expr(&ctx.aprime, &n_mod),
                "f": f.ordered_terms().iter().map(|(e, c)| serde_json::json!({"e": e, "c": c})).collect::<Vec<_>>(),
                "g": g,
                "case": if witness.is_some() { "ii" } else { "i" },
                "witness": witness.map(|w| serde_json::json!({
                    "middle": modules::module_expr(&ctx.aprime, &w.g1g2),
                    "dim_sunder": w.sunder_dim,
                    "m": modules::module_expr(&ctx.aprime, &w.m),
                })),
            })
        );
    } else {
        println!("module N = {}", modules::pretty(&ctx.aprime, &n_mod));
        println!("F_N = {}", f.render(&names));
        println!("g_N = ({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        if let Some(w) = witness {
            println!("case (ii) witness:");
            println!("  G1 + G2    = {}", modules::pretty(&ctx.aprime, &w.g1g2));
            println!(
                "  dim Sunder = ({})",
                w.sunder_dim.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            );
            println!("  M          = {}", modules::pretty(&ctx.aprime, &w.m));
        } else {
            println!("case (i): restriction is indecomposable");
        }
    }
    Ok(())
}

pub fn oracle_enumerate(matrix: &str, cap: usize, format: &str) -> Result<(), Error> {
    let text = read(matrix)?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Result<Vec<i64>, _> = line.split_whitespace().map(|t| t.parse()).collect();
        rows.push(row.map_err(|_| -> Error {
            DomainError::Other(format!("bad matrix row `{line}`")).into()
        })?);
    }
    let vars = oracle::enumerate_variables(rows, cap)?;
    let names: Vec<String> = (1..=vars.first().map(|v| v.1.len()).unwrap_or(0))
        .map(|i| i.to_string())
        .collect();
    if format == "json" {
        println!(
            "{}",
            serde_json::json!({
                "count": vars.len(),
                "variables": vars.iter().map(|(f, g)| serde_json::json!({
                    "f": f.ordered_terms().iter().map(|(e, c)| serde_json::json!({"e": e, "c": c})).collect::<Vec<_>>(),
                    "g": g,
                })).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("{} cluster variables", vars.len());
        for (f, g) in &vars {
            println!(
                "g = ({})  F = {}",
                g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                f.render(&names)
            );
        }
    }
    Ok(())
}

/// Cross-check a polygon algebra: the (F, g) pairs of all arc modules plus
/// the initial ones must equal the BFS closure of the exchange matrix.
pub fn oracle_check(file: &str) -> Result<(), Error> {
    let text = read(file)?;
    let header = text
        .lines()
        .find(|l| l.contains("# gentle-polygon"))
        .ok_or_else(|| -> Error {
            DomainError::Other(
                "oracle check needs a file produced by `gentle polygon` (marker comment missing)"
                    .into(),
            )
            .into()
        })?;
    let m: usize = header
        .split("m=")
        .nth(1)
        .and_then(|s| s.split_whitespace().next())
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| -> Error { DomainError::Other("bad polygon header".into()).into() })?;
    let diags = header
        .split("diagonals=")
        .nth(1)
        .map(|s| s.trim())
        .ok_or_else(|| -> Error { DomainError::Other("bad polygon header".into()).into() })?;
    let p = typeb::Polygon::new(m)?;
    let t = typeb::Triangulation::new(p, parse_diagonal_list(p, diags)?)?;
    let alg = typeb::triangulation_algebra(&t)?;
    let k = alg.vertex_count();

    let mut mine = std::collections::BTreeSet::new();
    for a in 0..m {
        for b in a + 2..m {
            if a == 0 && b == m - 1 {
                continue;
            }
            let dg = typeb::Diagonal { a, b };
            let (f, g) = if let Some(i) = t.index_of(dg) {
                let mut g = vec![0i64; k];
                g[i] = 1;
                (YPolynomial::one(k), g)
            } else {
                let md = typeb::arc_module(&alg, &t, dg)?;
                (f_polynomial(&alg, &md), g_vector(&alg, &md))
            };
            mine.insert(format!("{f:?}|{g:?}"));
        }
    }
    let vars = oracle::enumerate_variables(alg.exchange_matrix().entries, 1_000_000)?;
    let oracle_set: std::collections::BTreeSet<String> =
        vars.iter().map(|(f, g)| format!("{f:?}|{g:?}")).collect();
    println!("arc variables:    {}", mine.len());
    println!("oracle variables: {}", oracle_set.len());
    if mine == oracle_set {
        println!("cross-check: PASS");
        Ok(())
    } else {
        println!("cross-check: FAIL");
        Err(DomainError::Other("arc/mutation variable sets differ".into()).into())
    }
}
