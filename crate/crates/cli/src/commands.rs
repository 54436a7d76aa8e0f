use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cupcap::delta::{ComplexFile, DeltaComplex};
use cupcap::groupoid::{
    validate_groupoid, Chain, Cochain, FiniteGroupoid, GroupoidHom, GroupoidTables, Limits, Ring, TableFile,
};
use cupcap::linalg::{FgAbGroup, Int, IntMatrix};
use cupcap::sft::{cap_with_winding, sft_homology, AdjacencyFile};
use cupcap::zn::{compare_theorem, ActionFile};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::{check, CliError, Command, Report, RunConfig};

pub fn run(command: &Command, config: &RunConfig) -> Result<Report, CliError> {
    match command {
        Command::Homology { file } => groups(file, config, false),
        Command::Cohomology { file } => groups(file, config, true),
        Command::Cup { file, left, right } => cup(file, left, right, config),
        Command::Cap { file, chain, cochain } => cap(file, chain, cochain, config),
        Command::Pairing { file, by } => pairing(file, *by, config),
        Command::Induced { domain, codomain, map, cohomology } => induced(domain, codomain, map, *cohomology, config),
        Command::Sft { matrix, file } => sft(matrix.as_deref(), file.as_deref()),
        Command::ZnVerify { file } => zn_verify(file),
        Command::DeltaCohomology { file } => delta_cohomology(file),
        Command::DeltaCup { file } => delta_cup(file),
        Command::Check { file, trials } => {
            let g = load_groupoid(file, config, 4)?;
            check::run(&g, config.ring, config.seed, *trials)
        }
    }
}

fn input(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError(format!("{}: {e}", path.display()))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(path, format!("cannot read file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| input(path, e))
}

/// Loads a groupoid with limits allowing computations up to `degree`.
fn load_groupoid(path: &Path, config: &RunConfig, degree: usize) -> Result<FiniteGroupoid, CliError> {
    let tables: GroupoidTables = read_json(path)?;
    let g = validate_groupoid(&tables).map_err(|e| input(path, e))?;
    let limits = Limits {
        max_degree: degree.max(Limits::default().max_degree),
        max_strings: usize::try_from(config.budget).unwrap_or(usize::MAX),
    };
    Ok(g.with_limits(limits))
}

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError(e.to_string())
}

pub fn int_json(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn ints_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints_json(r)).collect())
}

fn group_json(g: &FgAbGroup) -> Value {
    json!({
        "group": g.to_string(),
        "free_rank": g.free_rank(),
        "torsion": ints_json(g.torsion()),
    })
}

fn coords(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(Int::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn groups(path: &Path, config: &RunConfig, cohomology: bool) -> Result<Report, CliError> {
    let degrees: Vec<usize> = match config.degree {
        Some(n) => vec![n],
        None => (0..=3).collect(),
    };
    let g = load_groupoid(path, config, *degrees.last().expect("nonempty"))?;
    let (mut text, mut rows) = (String::new(), Vec::new());
    for &n in &degrees {
        let h = if cohomology { g.cohomology(n, config.ring) } else { g.homology(n, config.ring) }.map_err(failure)?;
        if config.degree.is_some() {
            writeln!(text, "{h}").unwrap();
        } else {
            let label = if cohomology { format!("H^{n}") } else { format!("H_{n}") };
            writeln!(text, "{label} ≅ {h}").unwrap();
        }
        let mut row = group_json(&h);
        row["degree"] = json!(n);
        rows.push(row);
    }
    let kind = if cohomology { "cohomology" } else { "homology" };
    Ok(Report::ok(text, json!({ "kind": kind, "ring": config.ring.to_string(), "groups": rows })))
}

fn support_json(degree: usize, ring: Ring, support: Vec<(Vec<String>, Int)>) -> Value {
    let values: Vec<Value> = support.into_iter().map(|(s, v)| json!([s, int_json(&v)])).collect();
    json!({ "degree": degree, "ring": ring.to_string(), "values": values })
}

fn support_text(text: &mut String, support: &[(Vec<String>, Int)]) {
    for (s, v) in support {
        let name = if s.is_empty() { "()".to_string() } else { s.join(" ") };
        writeln!(text, "  {name}: {v}").unwrap();
    }
}

fn cochain(g: &FiniteGroupoid, path: &Path) -> Result<Cochain, CliError> {
    let t: TableFile = read_json(path)?;
    t.to_cochain(g).map_err(|e| input(path, e))
}

fn chain(g: &FiniteGroupoid, path: &Path) -> Result<Chain, CliError> {
    let t: TableFile = read_json(path)?;
    t.to_chain(g).map_err(|e| input(path, e))
}

fn peek_degree(path: &Path) -> Result<usize, CliError> {
    Ok(read_json::<TableFile>(path)?.degree)
}

fn cup(file: &Path, left: &Path, right: &Path, config: &RunConfig) -> Result<Report, CliError> {
    let degree = peek_degree(left)? + peek_degree(right)?;
    let g = load_groupoid(file, config, degree + 1)?;
    let (xi, eta) = (cochain(&g, left)?, cochain(&g, right)?);
    let product = g.cup(&xi, &eta).map_err(failure)?;
    let support = product.support(&g).map_err(failure)?;
    let class = g.cohomology_class(&product).ok();
    let mut text = format!("degree {} over {}, {} nonzero values\n", product.degree(), product.ring(), support.len());
    match &class {
        Some(c) => {
            let h = g.cohomology(product.degree(), product.ring()).map_err(failure)?;
            writeln!(text, "class {} in H^{} ≅ {h}", coords(c), product.degree()).unwrap();
        }
        None => writeln!(text, "not a cocycle").unwrap(),
    }
    support_text(&mut text, &support);
    let json = json!({
        "cochain": support_json(product.degree(), product.ring(), support),
        "class": class.as_deref().map(ints_json),
    });
    Ok(Report::ok(text, json))
}

fn cap(file: &Path, chain_path: &Path, cochain_path: &Path, config: &RunConfig) -> Result<Report, CliError> {
    let degree = peek_degree(chain_path)?;
    let g = load_groupoid(file, config, degree + 1)?;
    let (f, xi) = (chain(&g, chain_path)?, cochain(&g, cochain_path)?);
    let result = g.cap(&f, &xi).map_err(failure)?;
    let support = result.support(&g).map_err(failure)?;
    let class = g.homology_class(&result).ok();
    let mut text = format!("degree {} over {}, {} nonzero values\n", result.degree(), result.ring(), support.len());
    match &class {
        Some(c) => {
            let h = g.homology(result.degree(), result.ring()).map_err(failure)?;
            writeln!(text, "class {} in H_{} ≅ {h}", coords(c), result.degree()).unwrap();
        }
        None => writeln!(text, "not a cycle").unwrap(),
    }
    support_text(&mut text, &support);
    let json = json!({
        "chain": support_json(result.degree(), result.ring(), support),
        "class": class.as_deref().map(ints_json),
    });
    Ok(Report::ok(text, json))
}

fn pairing(file: &Path, m: usize, config: &RunConfig) -> Result<Report, CliError> {
    let n = config.degree.ok_or_else(|| CliError("pairing needs --degree".into()))?;
    let g = load_groupoid(file, config, n + 1)?;
    let table = g.cap_pairing_table(n, m, config.ring).map_err(failure)?;
    let mut text =
        format!("H_{n} ≅ {} ⌢ H^{m} ≅ {} → H_{} ≅ {}\n", table.homology, table.cohomology, n - m, table.target);
    for (i, row) in table.entries.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            writeln!(text, "c{i} ⌢ x{j} = {}", coords(c)).unwrap();
        }
    }
    let entries: Vec<Value> =
        table.entries.iter().map(|r| Value::Array(r.iter().map(|c| ints_json(c)).collect())).collect();
    let json = json!({
        "homology": group_json(&table.homology),
        "cohomology": group_json(&table.cohomology),
        "target": group_json(&table.target),
        "entries": entries,
    });
    Ok(Report::ok(text, json))
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct HomFile {
    map: std::collections::BTreeMap<String, String>,
}

fn induced(dom: &Path, cod: &Path, map: &Path, cohomology: bool, config: &RunConfig) -> Result<Report, CliError> {
    let n = config.degree.ok_or_else(|| CliError("induced needs --degree".into()))?;
    let (g, h) = (load_groupoid(dom, config, n + 1)?, load_groupoid(cod, config, n + 1)?);
    let file: HomFile = read_json(map)?;
    let pairs: Vec<(&String, &String)> = file.map.iter().collect();
    let pi = GroupoidHom::from_names(&g, &h, &pairs).map_err(|e| input(map, e))?;
    let (phi, label) = if cohomology {
        (pi.induced_on_cohomology(n, config.ring), format!("H^{n}"))
    } else {
        (pi.induced_on_homology(n, config.ring), format!("H_{n}"))
    };
    let phi = phi.map_err(failure)?;
    let text = format!("{label}: {} → {}\nmatrix {}\n", phi.domain, phi.codomain, phi.matrix());
    let json = json!({
        "degree": n,
        "variance": if cohomology { "cohomology" } else { "homology" },
        "domain": group_json(&phi.domain),
        "codomain": group_json(&phi.codomain),
        "matrix": matrix_json(phi.matrix()),
    });
    Ok(Report::ok(text, json))
}

/// A `1×k` matrix prints as a flat list, anything else as a list of rows.
fn compact_matrix(m: &IntMatrix) -> String {
    match m.shape() {
        (0, _) | (_, 0) => "0".into(),
        (1, _) => coords(m.row(0)),
        _ => m.to_string(),
    }
}

fn sft(matrix: Option<&str>, file: Option<&Path>) -> Result<Report, CliError> {
    let (adj, origin) = match (matrix, file) {
        (Some(m), _) => {
            let rows: Vec<Vec<i64>> = serde_json::from_str(m).map_err(|e| CliError(format!("--matrix: {e}")))?;
            (AdjacencyFile { vertices: Vec::new(), matrix: rows }, "--matrix".to_string())
        }
        (None, Some(p)) => (read_json(p)?, p.display().to_string()),
        (None, None) => return Err(CliError("give --matrix or --file".into())),
    };
    let a = adj.load().map_err(|e| CliError(format!("{origin}: {e}")))?;
    let h = sft_homology(&a).map_err(failure)?;
    let cap = cap_with_winding(&a).map_err(failure)?;
    let mut text = format!("H0 ≅ {}, H1 ≅ {}, cap = {}\n", h.h0, h.h1, compact_matrix(cap.matrix()));
    for k in h.kernel_basis().columns() {
        writeln!(text, "H1 generator {}", coords(&k)).unwrap();
    }
    let kernel: Vec<Value> = h.kernel_basis().columns().map(|k| ints_json(&k)).collect();
    let json = json!({
        "h0": group_json(&h.h0),
        "h1": group_json(&h.h1),
        "kernel_basis": kernel,
        "cap": matrix_json(cap.matrix()),
    });
    Ok(Report::ok(text, json))
}

fn zn_verify(path: &Path) -> Result<Report, CliError> {
    let file: ActionFile = read_json(path)?;
    let (action, cocycles) = file.load().map_err(|e| input(path, e))?;
    let report = compare_theorem(&action, &cocycles).map_err(|e| input(path, e))?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in &report.rows {
        let mark = if r.lhs == r.rhs { "" } else { "  (differs)" };
        writeln!(text, "{}: lhs {}, rhs {}{mark}", r.point, r.lhs, r.rhs).unwrap();
        rows.push(json!({ "point": r.point, "lhs": int_json(&r.lhs), "rhs": int_json(&r.rhs) }));
    }
    let passed = report.all_equal();
    writeln!(text, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
    Ok(Report { text, json: json!({ "rows": rows, "pass": passed }), passed })
}

fn load_complex(path: &Path) -> Result<DeltaComplex, CliError> {
    let file: ComplexFile = read_json(path)?;
    file.load().map_err(|e| input(path, e))
}

fn torsion_text(g: &FgAbGroup) -> String {
    if g.torsion().is_empty() {
        "none".into()
    } else {
        g.torsion().iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" ⊕ ")
    }
}

fn delta_cohomology(path: &Path) -> Result<Report, CliError> {
    let k = load_complex(path)?;
    let h = k.cohomology().map_err(failure)?;
    let text = format!(
        "H1 rank {} torsion {}; H2 rank {} torsion {}\n",
        h.h1.free_rank(),
        torsion_text(&h.h1),
        h.h2.free_rank(),
        torsion_text(&h.h2)
    );
    Ok(Report::ok(text, json!({ "h1": group_json(&h.h1), "h2": group_json(&h.h2) })))
}

fn delta_cup(path: &Path) -> Result<Report, CliError> {
    let k = load_complex(path)?;
    let basis = k.declared_basis().map_err(|e| input(path, e))?;
    let table = k.cup_table_of(&basis, k.declared_cocycles()).map_err(|e| input(path, e))?;
    let entries: Vec<Value> =
        table.entries.iter().map(|r| Value::Array(r.iter().map(|c| ints_json(c)).collect())).collect();
    let json = json!({ "rows": table.rows, "columns": table.columns, "entries": entries });
    Ok(Report::ok(table.to_string(), json))
}
