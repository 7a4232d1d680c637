//! Human-readable listings and Graphviz output for [`Report`]s.

use crate::error::{CliError, Result};
use crate::report::{
    fraction_to_decimal, graded_text, Body, BoundEntry, BoundsEntry, CheckBody, Input, Report,
};
use std::fmt::Write;

fn set_text(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

/// Extent listing: names for Boolean inputs, graded over `input.objects` otherwise.
fn extent_text(input: &Input, v: &[String]) -> String {
    if input.is_fuzzy() {
        graded_text(&input.objects, v)
    } else {
        set_text(v)
    }
}

fn intent_text(input: &Input, v: &[String]) -> String {
    if input.is_fuzzy() {
        graded_text(&input.attributes, v)
    } else {
        set_text(v)
    }
}

fn bound_text(b: &BoundEntry) -> String {
    match b {
        BoundEntry::Concept { extent, intent } => {
            format!("<{}, {}>", set_text(extent), set_text(intent))
        }
        BoundEntry::IdentifiedWithTop => "identified with <B, {}>".into(),
        BoundEntry::IdentifiedWithBottom => "identified with <{}, A>".into(),
    }
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "n/a",
    }
}

fn bounds_text(out: &mut String, indent: &str, b: &BoundsEntry) {
    let _ = writeln!(out, "{indent}upper: {}", bound_text(&b.upper));
    let _ = writeln!(out, "{indent}lower: {}", bound_text(&b.lower));
    let _ = writeln!(
        out,
        "{indent}upper closed: {}, upper is coatom: {}, lower closed: {}, lower within upper: {}, property-oriented: {}",
        flag(b.upper_closed),
        flag(b.upper_is_coatom),
        flag(b.lower_closed),
        flag(b.lower_within_upper),
        flag(Some(b.property_oriented)),
    );
}

fn index_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    items.join(", ")
}

fn counted(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

pub fn text(r: &Report) -> String {
    let mut out = String::new();
    let input = &r.input;
    let _ = write!(
        out,
        "{} context: {}, {}",
        input.kind,
        counted(input.attributes.len(), "attribute"),
        counted(input.objects.len(), "object")
    );
    if let Some(f) = &input.frame {
        let _ = write!(out, ", frame {f}");
    }
    out.push('\n');

    match &r.body {
        Body::Lattice(l) => {
            let _ = writeln!(out, "{}", counted(l.concepts.len(), "concept"));
            for c in &l.concepts {
                let _ = writeln!(
                    out,
                    "  C{}: <{}, {}>",
                    c.index,
                    extent_text(input, &c.extent),
                    intent_text(input, &c.intent)
                );
            }
            let edges: Vec<String> = l.covers.iter().map(|[i, j]| format!("C{i}<C{j}")).collect();
            let _ = writeln!(out, "{} covers: {}", l.covers.len(), edges.join(" "));
            let _ = writeln!(out, "atoms: {}", index_list(&l.atoms));
            let _ = writeln!(out, "coatoms: {}", index_list(&l.coatoms));
        }
        Body::Cn(cn) => {
            let _ = writeln!(
                out,
                "C_N has {} elements, {} atoms",
                cn.element_count,
                cn.atoms.len()
            );
            match &cn.pairs {
                Some(pairs) => {
                    for p in pairs {
                        let _ = writeln!(
                            out,
                            "  P{}: ({}, {})",
                            p.index.unwrap_or_default(),
                            set_text(&p.objects),
                            set_text(&p.attributes)
                        );
                    }
                    let covers = cn.covers.as_deref().unwrap_or_default();
                    let edges: Vec<String> =
                        covers.iter().map(|[i, j]| format!("P{i}<P{j}")).collect();
                    let _ = writeln!(out, "{} covers: {}", covers.len(), edges.join(" "));
                    let _ = writeln!(
                        out,
                        "join-irreducible: {}",
                        index_list(cn.join_irreducible.as_deref().unwrap_or_default())
                    );
                }
                None => {
                    let _ = writeln!(out, "  (too many atoms to list every element)");
                }
            }
            let _ = writeln!(out, "atoms:");
            for a in &cn.atoms {
                let _ = writeln!(
                    out,
                    "  ({}, {})",
                    set_text(&a.objects),
                    set_text(&a.attributes)
                );
            }
        }
        Body::Factor(f) => {
            let n = &f.normalization;
            if n.unchanged {
                let _ = writeln!(out, "already normalized");
            } else {
                let _ = writeln!(
                    out,
                    "normalization removed full rows {}, empty rows {}, full columns {}, empty columns {}",
                    set_text(&n.removed_full_rows),
                    set_text(&n.removed_empty_rows),
                    set_text(&n.removed_full_columns),
                    set_text(&n.removed_empty_columns)
                );
            }
            if n.collapsed {
                let _ = writeln!(out, "the normalized core is empty; nothing to factor");
            }
            let _ = writeln!(out, "{}", counted(f.blocks.len(), "block"));
            for b in &f.blocks {
                let _ = writeln!(
                    out,
                    "  block {}: objects {} x attributes {}, {}",
                    b.index,
                    set_text(&b.objects),
                    set_text(&b.attributes),
                    counted(b.incidences, "incidence")
                );
                if let Some(bounds) = &b.bounds {
                    bounds_text(&mut out, "    ", bounds);
                }
            }
            let _ = writeln!(out, "reconstruction: {}", f.reconstruction);
            if let Some(rs) = &f.rstar {
                let _ = writeln!(
                    out,
                    "R*: {} cells covering {} incidences{}",
                    rs.cells,
                    rs.relation_cells,
                    if rs.intersection_checked {
                        " (intersection over C_N matches the atom rectangles)"
                    } else {
                        ""
                    }
                );
            }
        }
        Body::Fn(f) => {
            let _ = writeln!(
                out,
                "F_N has {} pairs ({} candidates scanned)",
                f.pairs.len(),
                f.candidates
            );
            for p in &f.pairs {
                let _ = writeln!(
                    out,
                    "  N{}: ({}, {})",
                    p.index,
                    graded_text(&input.objects, &p.g),
                    graded_text(&input.attributes, &p.f)
                );
            }
            let edges: Vec<String> = f.covers.iter().map(|[i, j]| format!("N{i}<N{j}")).collect();
            let _ = writeln!(out, "{} covers: {}", f.covers.len(), edges.join(" "));
        }
        Body::Check(CheckBody::Boolean { pairs }) => {
            for p in pairs {
                let _ = writeln!(
                    out,
                    "P{}: ({}, {})",
                    p.index,
                    set_text(&p.objects),
                    set_text(&p.attributes)
                );
                match &p.bounds {
                    Some(b) => bounds_text(&mut out, "  ", b),
                    None => {
                        let _ = writeln!(out, "  trivial pair");
                    }
                }
            }
        }
        Body::Check(CheckBody::Fuzzy {
            props,
            top_normalized,
            pairs,
        }) => {
            let _ = writeln!(
                out,
                "checking {} on {} pairs; top-normalized by rows: {}",
                props.join(","),
                pairs.len(),
                if *top_normalized { "yes" } else { "no" }
            );
            for p in pairs {
                let _ = writeln!(
                    out,
                    "N{}: ({}, {})",
                    p.index,
                    graded_text(&input.objects, &p.g),
                    graded_text(&input.attributes, &p.f)
                );
                if let Some(v) = p.fp1 {
                    let _ = writeln!(out, "  fp1 g^up-pi <= g^up-N: {}", flag(Some(v)));
                }
                if let Some(v) = p.fp2 {
                    let _ = writeln!(out, "  fp2 property-oriented concept: {}", flag(Some(v)));
                }
                if let Some(v) = &p.fp3 {
                    let _ = writeln!(
                        out,
                        "  fp3 g^up-N <= g^up-pi: {}{}",
                        flag(Some(v.holds)),
                        if v.holds || v.violated {
                            ""
                        } else {
                            " (hypotheses not met)"
                        }
                    );
                }
                if let Some(v) = &p.fp4 {
                    let _ = writeln!(
                        out,
                        "  fp4 g^up <= g^up-pi: {}; uncovered attributes {}",
                        flag(Some(v.inequality_holds)),
                        set_text(&v.uncovered)
                    );
                    for a in &v.attributes {
                        let _ = writeln!(
                            out,
                            "    {}: fp4 {}, fp4' {}, g^up = {}, g^up-pi = {}",
                            a.attribute,
                            flag(Some(a.fp4)),
                            flag(Some(a.fp4_prime)),
                            fraction_to_decimal(&a.up),
                            fraction_to_decimal(&a.up_pi)
                        );
                    }
                }
                if let Some(v) = &p.fp5 {
                    let label = |i: Option<usize>| i.map_or("?".to_string(), |i| format!("C{i}"));
                    let _ = writeln!(
                        out,
                        "  fp5 interval [{}, {}]: {} .. {}{}",
                        label(v.lower),
                        label(v.upper),
                        graded_text(&input.objects, &v.lower_extent),
                        graded_text(&input.objects, &v.upper_extent),
                        if v.ordered { "" } else { " (not ordered)" }
                    );
                }
            }
        }
        Body::Reconstruct(rc) => {
            let _ = writeln!(
                out,
                "{} blocks; reconstruction {}",
                rc.blocks,
                if rc.exact { "exact" } else { "MISMATCH" }
            );
            out.push_str(&rc.cxt);
        }
    }

    if let Some(o) = &r.oracle {
        let _ = writeln!(
            out,
            "oracle: {} entries compared, {}",
            o.checked,
            if o.agrees { "agrees" } else { "DISAGREES" }
        );
        for m in &o.mismatches {
            let _ = writeln!(out, "  {}: fast {} / oracle {}", m.input, m.fast, m.oracle);
        }
    }
    for f in &r.failures {
        let _ = writeln!(out, "FAILED: {f}");
    }
    out
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                q.push('\\');
                q.push(c);
            }
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

fn hasse_dot(name: &str, nodes: &[(String, String)], covers: &[[usize; 2]]) -> String {
    let mut out =
        format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, (id, label)) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(&format!("{id}\n{label}")));
    }
    for [i, j] in covers {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

pub fn dot(r: &Report) -> Result<String> {
    let input = &r.input;
    Ok(match &r.body {
        Body::Lattice(l) => {
            let nodes: Vec<(String, String)> = l
                .concepts
                .iter()
                .map(|c| {
                    (
                        format!("C{}", c.index),
                        format!(
                            "{}\n{}",
                            extent_text(input, &c.extent),
                            intent_text(input, &c.intent)
                        ),
                    )
                })
                .collect();
            hasse_dot("lattice", &nodes, &l.covers)
        }
        Body::Cn(cn) => {
            let pairs = cn.pairs.as_ref().ok_or_else(|| {
                CliError::Usage(
                    "C_N has too many elements to draw; use --emit json for the atoms".into(),
                )
            })?;
            let nodes: Vec<(String, String)> = pairs
                .iter()
                .map(|p| {
                    (
                        format!("P{}", p.index.unwrap_or_default()),
                        format!("{}\n{}", set_text(&p.objects), set_text(&p.attributes)),
                    )
                })
                .collect();
            hasse_dot("cn", &nodes, cn.covers.as_deref().unwrap_or_default())
        }
        Body::Fn(f) => {
            let nodes: Vec<(String, String)> = f
                .pairs
                .iter()
                .map(|p| {
                    (
                        format!("N{}", p.index),
                        format!(
                            "{}\n{}",
                            graded_text(&input.objects, &p.g),
                            graded_text(&input.attributes, &p.f)
                        ),
                    )
                })
                .collect();
            hasse_dot("fn", &nodes, &f.covers)
        }
        Body::Factor(f) => {
            let mut out = String::from("digraph factorization {\n  rankdir=LR;\n");
            for b in &f.blocks {
                let _ = writeln!(out, "  subgraph cluster_{} {{", b.index);
                let _ = writeln!(out, "    label={};", quote(&format!("block {}", b.index)));
                for a in &b.attributes {
                    let _ = writeln!(out, "    {} [shape=box];", quote(&format!("a:{a}")));
                }
                for o in &b.objects {
                    let _ = writeln!(out, "    {} [shape=ellipse];", quote(&format!("o:{o}")));
                }
                out.push_str("  }\n");
            }
            // every core incidence lies inside one block
            for (a, b) in &f.edges {
                let _ = writeln!(
                    out,
                    "  {} -> {};",
                    quote(&format!("a:{a}")),
                    quote(&format!("o:{b}"))
                );
            }
            out.push_str("}\n");
            out
        }
        Body::Check(_) | Body::Reconstruct(_) => {
            return Err(CliError::Usage(
                "DOT output is available for lattice, cn, fn and factor".into(),
            ))
        }
    })
}
