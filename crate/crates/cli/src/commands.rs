use std::fmt::Write;
use std::path::Path;

use equimon::catmon::{nerve, nerve_of_monoid, Semigroupoid};
use equimon::equivariant::{
    check_fixed_commutes, check_naturality, compare_fixed, hom_counts, nerve_of_gmonoid, FixedComparison, OrbitCategory, Subgroup,
};
use equimon::formats::{BissetFile, CategoryFile, ComplexFile, GMonoidFile, MonoidFile, PointFile, SsetFile, WreathFile};
use equimon::homology::{ez_check, homology as homology_of, HomologyResult};
use equimon::mcduff::{f_graph, verify_mcduff_graph};
use equimon::realize::normalize_point;
use serde_json::json;

use crate::report::{load, verdict, CliError, Report};

type Outcome = Result<Report, CliError>;

fn degrees(h: &HomologyResult) -> String {
    let mut out = String::new();
    for (n, g) in h.groups.iter().enumerate() {
        writeln!(out, "  H_{n} = {g}").unwrap();
    }
    out
}

fn table_text(m: &MonoidFile) -> String {
    let width = m.elements.iter().map(|e| e.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &m.table {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", cells.join(" ")).unwrap();
    }
    out
}

pub fn homology(path: &Path, d: usize) -> Outcome {
    let x = load::<SsetFile>(path)?.to_sset()?;
    let h = homology_of(&x, d)?;
    Ok(Report {
        text: format!("level sizes {:?}\n{}{h}\n", x.level_sizes(), degrees(&h)),
        json: json!({ "command": "homology", "cutoff": x.cutoff(), "level_sizes": x.level_sizes(), "homology": h, "summary": h.to_string() }),
    })
}

pub fn classify(path: &Path, d: usize) -> Outcome {
    let m = load::<MonoidFile>(path)?.to_monoid()?;
    let x = nerve_of_monoid(&m, d + 1);
    let h = homology_of(&x, d)?;
    Ok(Report {
        text: format!("monoid of order {}\nnerve level sizes {:?}\n{}{h}\n", m.size(), x.level_sizes(), degrees(&h)),
        json: json!({
            "command": "classify",
            "order": m.size(),
            "nerve_level_sizes": x.level_sizes(),
            "homology": h,
            "summary": h.to_string(),
        }),
    })
}

pub fn semigroupoid(path: &Path, base: &str, d: usize) -> Outcome {
    let cat = load::<CategoryFile>(path)?.to_category()?;
    let semi = Semigroupoid::new(cat.clone())?;
    let (m, witness) = semi.associated_monoid(cat.object_index(base)?)?;
    let verified = witness.verify(&cat, &m);
    let of_category = homology_of(&nerve(&cat, d + 1), d)?;
    let of_monoid = homology_of(&nerve_of_monoid(&m, d + 1), d)?;
    let passed = verified.is_ok() && of_category == of_monoid;
    let monoid = MonoidFile::from_monoid(&m);
    let name = |f: usize| cat.morphism(f).name.clone();
    let objects = cat.objects();
    let chosen: Vec<String> = witness.chosen.iter().map(|&f| name(f)).collect();
    let coordinates: Vec<[String; 4]> = witness
        .coordinates
        .iter()
        .enumerate()
        .map(|(f, &(e, y, z))| [name(f), m.name(e).to_string(), objects[y].clone(), objects[z].clone()])
        .collect();
    let mut text = format!("associated monoid at {base}: order {}\n{}", m.size(), table_text(&monoid));
    writeln!(text, "chosen isomorphisms {}", chosen.join(", ")).unwrap();
    for [f, e, y, z] in &coordinates {
        writeln!(text, "  {f} = ({e}, {y}, {z})").unwrap();
    }
    match &verified {
        Ok(()) => writeln!(text, "splitting S ≅ M × J verified").unwrap(),
        Err(e) => writeln!(text, "splitting fails: {e}").unwrap(),
    }
    writeln!(text, "H_*(S) = {of_category}\nH_*(M) = {of_monoid}\n{}", verdict(passed)).unwrap();
    Ok(Report {
        text,
        json: json!({
            "command": "semigroupoid",
            "base": base,
            "monoid": monoid,
            "chosen": chosen,
            "coordinates": coordinates,
            "splitting_error": verified.err(),
            "homology_category": of_category,
            "homology_monoid": of_monoid,
            "verdict": verdict(passed),
        }),
    })
}

pub fn wreath_table(path: &Path) -> Outcome {
    let data = load::<WreathFile>(path)?.to_wreath_data()?;
    let w = data.wreath()?;
    let file = MonoidFile::from_monoid(&w);
    Ok(Report {
        text: format!("wreath product of order {}, associative and unital\n  {}\n{}PASS\n", w.size(), file.elements.join(" "), table_text(&file)),
        json: json!({ "command": "wreath", "order": w.size(), "monoid": file, "verdict": "PASS" }),
    })
}

fn comparison_text(c: &FixedComparison) -> String {
    let mut out = format!("H = {}: fixed monoid {{{}}}\n", c.subgroup, c.fixed_elements.join(","));
    if let Some(m) = &c.mismatch {
        writeln!(out, "  tables differ: {m}").unwrap();
    }
    writeln!(out, "  H_*(N(M^H)) = {}\n  H_*(N(M)^H) = {}\n  {}", c.nerve_of_fixed, c.fixed_of_nerve, verdict(c.passed())).unwrap();
    out
}

/// Splits on commas outside parentheses.
fn split_names(list: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for ch in list.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        out.last_mut().expect("nonempty").push(ch);
    }
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn fixed(path: &Path, subgroup: Option<&str>, d: usize) -> Outcome {
    let a = load::<GMonoidFile>(path)?.to_gmonoid()?;
    let comparisons = match subgroup {
        Some(list) => {
            let group = a.group();
            let elements = split_names(list).iter().map(|n| group.monoid().index_of(n)).collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::new(group, elements)?;
            let y = nerve_of_gmonoid(&a, d + 1)?;
            vec![compare_fixed(&a, &y, &h, d)?]
        }
        None => check_fixed_commutes(&a, d + 1, d)?.comparisons,
    };
    let passed = comparisons.iter().all(FixedComparison::passed);
    let mut text: String = comparisons.iter().map(comparison_text).collect();
    writeln!(text, "{}", verdict(passed)).unwrap();
    Ok(Report { text, json: json!({ "command": "fixed", "max_degree": d, "comparisons": comparisons, "verdict": verdict(passed) }) })
}

pub fn orbit_cat(path: &Path) -> Outcome {
    let g = load::<MonoidFile>(path)?.to_group()?;
    let o = OrbitCategory::new(&g);
    let rows = hom_counts(&o);
    let k = o.subgroups().len();
    let passed = rows.iter().all(|r| r.morphisms == r.fixed_cosets);
    let hom_sets: Vec<_> = rows
        .iter()
        .enumerate()
        .map(|(idx, r)| {
            let reps: Vec<&str> = o.hom(idx / k, idx % k).iter().map(|&f| g.name(o.morphisms()[f].representative)).collect();
            json!({ "source": r.source, "target": r.target, "morphisms": r.morphisms, "fixed_cosets": r.fixed_cosets, "representatives": reps })
        })
        .collect();
    let subgroups: Vec<String> = o.subgroups().iter().map(|h| g.subgroup_name(h)).collect();
    let mut text = format!("{} subgroups: {}\n", k, subgroups.join(" "));
    for r in &rows {
        writeln!(text, "  |Hom(G/{}, G/{})| = {}, |(G/K)^H| = {}", r.source, r.target, r.morphisms, r.fixed_cosets).unwrap();
    }
    writeln!(text, "{}", verdict(passed)).unwrap();
    Ok(Report {
        text,
        json: json!({
            "command": "orbit-cat",
            "subgroups": subgroups,
            "hom_counts": rows.iter().map(|r| r.morphisms).collect::<Vec<_>>(),
            "hom_sets": hom_sets,
            "verdict": verdict(passed),
        }),
    })
}

pub fn naturality(path: &Path, cutoff: usize) -> Outcome {
    let a = load::<GMonoidFile>(path)?.to_gmonoid()?;
    let report = check_naturality(&a, cutoff)?;
    let mut text = format!("{} squares, {} simplices checked\n", report.squares, report.simplices_checked);
    for f in report.failures.iter().take(10) {
        writeln!(text, "  {f:?}").unwrap();
    }
    writeln!(text, "{}", verdict(report.passed())).unwrap();
    Ok(Report {
        text,
        json: json!({
            "command": "naturality",
            "cutoff": cutoff,
            "squares": report.squares,
            "simplices_checked": report.simplices_checked,
            "failures": report.failures,
            "verdict": verdict(report.passed()),
        }),
    })
}

pub fn mcduff(path: &Path) -> Outcome {
    let p = load::<ComplexFile>(path)?.to_complex()?;
    let presentation = f_graph(&p)?;
    let report = verify_mcduff_graph(&p)?;
    let mut text = format!("F(P): {} objects, base {}\n", presentation.objects.len(), presentation.base);
    for g in &presentation.generators {
        writeln!(text, "  {}{}", g.name, if g.in_tree { " (tree)" } else { "" }).unwrap();
    }
    writeln!(text, "rank {}, betti_0 {}, betti_1 {}\n{}", report.rank, report.betti_0, report.betti_1, verdict(report.passed())).unwrap();
    Ok(Report {
        text,
        json: json!({
            "command": "mcduff",
            "presentation": presentation,
            "rank": report.rank,
            "betti_0": report.betti_0,
            "betti_1": report.betti_1,
            "torsion_free": report.torsion_free,
            "verdict": verdict(report.passed()),
        }),
    })
}

pub fn ez(path: &Path, d: usize) -> Outcome {
    let b = load::<BissetFile>(path)?.to_bisset()?;
    let report = ez_check(&b, d)?;
    Ok(Report {
        text: format!("diagonal {}\ntotal    {}\n{}\n", report.diagonal, report.total, verdict(report.passed())),
        json: json!({
            "command": "ez-check",
            "max_degree": d,
            "diagonal": report.diagonal,
            "total": report.total,
            "mismatches": report.mismatches,
            "verdict": verdict(report.passed()),
        }),
    })
}

pub fn normalize(sset: &Path, point: &Path) -> Outcome {
    let x = load::<SsetFile>(sset)?.to_sset()?;
    let p = load::<PointFile>(point)?.to_point(&x)?;
    let canonical = normalize_point(&x, &p)?;
    let out = PointFile::from_point(&x, &canonical);
    Ok(Report {
        text: format!("{} at level {} with coordinates ({})\n", x.label(canonical.level, canonical.simplex), canonical.level, out.coords.join(", ")),
        json: json!({ "command": "normalize-point", "input": PointFile::from_point(&x, &p), "canonical": out }),
    })
}
