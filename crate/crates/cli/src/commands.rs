use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use ordergap::deciders::{
    check_up_directed, has_chain_gap_property, has_selection_property, is_retract_of, RetractOutcome, SelectionOutcome,
};
use ordergap::gaps::{classify_all, enumerate_gaps, PairReport};
use ordergap::io::PosetDocument;
use ordergap::modfin::{
    check_operator, fsigma_separator, hadamard_separator, leq_fin, luzin_pair, Branch, FsigmaSeparation, NodeSet,
    PeriodicSet,
};
use ordergap::sierpinski::{
    generate, generate_lattice, normal_form, normalize_intersection, GeneratedLattice, SierpinskiChain,
    SierpinskiDocument,
};
use ordergap::{Error, LatticeCheck, Poset};
use serde_json::{json, Value};

use crate::dot::render_dot;
use crate::{Format, ModfinCmd, Options, PosetCmd, RenderCmd, SierpinskiCmd};

/// Sampled triples for distributivity on lattices too large for the
/// exhaustive sublattice search.
const DISTRIBUTIVITY_SAMPLES: usize = 20_000;

#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Input(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_limit() => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Input(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

type Outcome = Result<Report, Failure>;

pub struct Report {
    pub json: Value,
    pub text: String,
    pub dot: Option<String>,
    pub code: u8,
}

impl Report {
    fn new(json: Value, text: String, holds: bool) -> Report {
        Report {
            json,
            text,
            dot: None,
            code: if holds { 0 } else { 1 },
        }
    }

    pub fn render(&self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("report serializes") + "\n"),
            Format::Text => Ok(self.text.clone()),
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| Failure::Input("this command has no DOT rendering".into())),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    Ok(PosetDocument::parse(&read(path)?)?.to_poset()?)
}

fn load_chain(path: &Path) -> Result<SierpinskiChain, Failure> {
    Ok(SierpinskiDocument::parse(&read(path)?)?.to_chain()?)
}

fn labels(p: &Poset, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|i| p.label(i).to_owned()).collect()
}

fn label_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::to_owned)
        .collect()
}

pub fn poset(cmd: &PosetCmd, o: &Options) -> Outcome {
    let limits = o.limits();
    match cmd {
        PosetCmd::Check { file } => {
            let p = load_poset(file)?;
            let lattice = p.is_lattice();
            let covers: Vec<[&str; 2]> = p.covers().into_iter().map(|(i, j)| [p.label(i), p.label(j)]).collect();
            let mut json = json!({
                "elements": p.len(),
                "comparablePairs": p.comparable_pairs(),
                "covers": covers,
                "lattice": lattice.is_lattice(),
            });
            let mut text = format!(
                "{} elements, {} comparable pairs, {} covers\n",
                p.len(),
                p.comparable_pairs(),
                covers.len()
            );
            match lattice {
                LatticeCheck::Lattice => text.push_str("lattice\n"),
                LatticeCheck::Missing {
                    pair: (i, j),
                    join,
                    meet,
                } => {
                    json["missing"] = json!({ "pair": [p.label(i), p.label(j)], "join": join, "meet": meet });
                    let what = match (join, meet) {
                        (true, true) => "join and meet",
                        (true, false) => "join",
                        _ => "meet",
                    };
                    writeln!(text, "not a lattice: {}, {} have no {what}", p.label(i), p.label(j)).unwrap();
                }
            }
            let mut r = Report::new(json, text, lattice.is_lattice() || !o.expect_lattice());
            r.dot = Some(render_dot(&p, "P"));
            Ok(r)
        }
        PosetCmd::Gaps { file, all } => {
            let p = load_poset(file)?;
            let rows = if *all {
                classify_all(&p, &limits)?
                    .into_iter()
                    .map(|(a, b, class)| match class {
                        ordergap::PairClass::Gap => PairReport::for_gap(&p, &ordergap::Pregap::new(&p, a, b)?, &limits),
                        _ => PairReport::new(&p, &a, &b, class),
                    })
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                enumerate_gaps(&p, &limits)?
                    .iter()
                    .map(|g| PairReport::for_gap(&p, g, &limits))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let gaps = rows.iter().filter(|r| r.status == "gap").count();
            let mut text = String::new();
            for r in &rows {
                write!(text, "{{{}}}|{{{}}} {}", r.a.join(","), r.b.join(","), r.status).unwrap();
                if let Some(w) = &r.witness {
                    write!(text, " by {w}").unwrap();
                }
                if let (Some(m), Some(i)) = (r.minimal, r.irreducible) {
                    write!(text, " minimal={m} irreducible={i}").unwrap();
                }
                text.push('\n');
            }
            writeln!(text, "{gaps} gaps").unwrap();
            let json = json!({ "gaps": gaps, "pairs": rows });
            Ok(Report::new(json, text, gaps == 0 || !o.expect_lattice()))
        }
        PosetCmd::Selection { file } => {
            let p = load_poset(file)?;
            Ok(match has_selection_property(&p, &limits)? {
                SelectionOutcome::Selector(cert) => {
                    let selector = cert.to_json(&p);
                    let mut text = String::from("selector found\n");
                    for (class, target) in selector.as_object().expect("object") {
                        writeln!(text, "  {class} -> {}", target.as_str().unwrap_or_default()).unwrap();
                    }
                    Report::new(
                        json!({ "holds": true, "classes": cert.bp.classes.len(), "selector": selector }),
                        text,
                        true,
                    )
                }
                SelectionOutcome::Refuted { classes, exhaustion } => Report::new(
                    json!({ "holds": false, "classes": classes, "exhaustion": exhaustion }),
                    format!("no selector: {classes} classes, {} search nodes\n", exhaustion.nodes),
                    false,
                ),
            })
        }
        PosetCmd::ChainGap { file } => {
            let p = load_poset(file)?;
            let report = has_chain_gap_property(&p, &limits)?;
            let mut text = String::new();
            let gaps: Vec<Value> = report
                .gaps
                .iter()
                .map(|g| {
                    let shown = g.gap.display(&p);
                    let preserved = g
                        .preserved_by
                        .as_ref()
                        .map(|(k, m)| json!({ "chain": k, "map": m.to_json() }));
                    match &g.preserved_by {
                        Some((k, _)) => writeln!(text, "{shown} preserved in chain({k})").unwrap(),
                        None => writeln!(text, "{shown} not preserved ({} maps)", g.maps_examined).unwrap(),
                    }
                    let mut v = json!({
                        "gap": shown,
                        "preservedBy": preserved,
                        "mapsExamined": g.maps_examined,
                        "minimal": g.minimal,
                        "irreducible": g.irreducible,
                        "containsRegularIrreducible": g.contains_regular_irreducible,
                    });
                    if let Some(w) = &g.regularity_warning {
                        v["warning"] = Value::String(w.clone());
                    }
                    v
                })
                .collect();
            writeln!(
                text,
                "chain gap property {}",
                if report.holds { "holds" } else { "fails" }
            )
            .unwrap();
            Ok(Report::new(
                json!({ "holds": report.holds, "gaps": gaps }),
                text,
                report.holds,
            ))
        }
        PosetCmd::RetractOf { p, q } => {
            let (p, q) = (load_poset(p)?, load_poset(q)?);
            Ok(match is_retract_of(&p, &q, &limits)? {
                RetractOutcome::Retract(cert) => {
                    let mut text = String::from("retract\n");
                    for (x, &y) in cert.f.image().iter().enumerate() {
                        writeln!(text, "  f: {} -> {}", p.label(x), q.label(y)).unwrap();
                    }
                    for (y, &x) in cert.g.image().iter().enumerate() {
                        writeln!(text, "  g: {} -> {}", q.label(y), p.label(x)).unwrap();
                    }
                    let mut json = cert.to_json();
                    json["retract"] = Value::Bool(true);
                    Report::new(json, text, true)
                }
                RetractOutcome::Absent(ex) => Report::new(
                    json!({ "retract": false, "exhaustion": ex }),
                    format!("not a retract ({} search nodes)\n", ex.nodes),
                    false,
                ),
            })
        }
        PosetCmd::UpDirected { file } => {
            let p = load_poset(file)?;
            let u = check_up_directed(&p);
            let witness = u.witness.map(|(i, j)| [p.label(i), p.label(j)]);
            let text = match witness {
                None => "up-directed\n".to_owned(),
                Some([a, b]) => format!("not up-directed: {a}, {b} have no common upper bound\n"),
            };
            Ok(Report::new(
                json!({ "holds": u.holds, "witness": witness }),
                text,
                u.holds,
            ))
        }
    }
}

fn lattice_report(gl: &GeneratedLattice, seed: u64) -> Report {
    let export = gl.export();
    let dist = gl.distributivity(DISTRIBUTIVITY_SAMPLES, seed);
    let lp = gl.poset();
    let names: Vec<String> = (0..gl.len()).map(|i| gl.member_label(i)).collect();
    let mut text = String::new();
    for (i, name) in names.iter().enumerate() {
        writeln!(text, "{i}: {name}").unwrap();
    }
    for (lo, hi) in &export.covers {
        writeln!(text, "{} < {}", names[*lo], names[*hi]).unwrap();
    }
    let distributive = dist.holds();
    writeln!(
        text,
        "{} members, {} ({})",
        gl.len(),
        if distributive {
            "distributive"
        } else {
            "not distributive"
        },
        if dist.exhaustive { "exhaustive" } else { "sampled" }
    )
    .unwrap();
    let json = json!({
        "members": export.members,
        "covers": export.covers,
        "distributive": distributive,
        "method": if dist.exhaustive { "exhaustive" } else { "sampled" },
    });
    let mut r = Report::new(json, text, distributive);
    r.dot = Some(render_dot(&lp, "L"));
    r
}

pub fn sierpinski(cmd: &SierpinskiCmd, o: &Options) -> Outcome {
    let limits = o.limits();
    match cmd {
        SierpinskiCmd::Gen { n, mode } => {
            if *n > limits.sierpinski_bound {
                return Err(Error::BoundExceeded {
                    what: "Sierpinski ground set",
                    size: *n,
                    bound: limits.sierpinski_bound,
                }
                .into());
            }
            let sc = generate(*n, *mode, o.seed())?;
            let doc = SierpinskiDocument::of(&sc);
            let text = format!("points {}\nwellOrder {:?}\n", doc.points.join(" "), doc.well_order);
            Ok(Report::new(
                serde_json::to_value(&doc).expect("document serializes"),
                text,
                true,
            ))
        }
        SierpinskiCmd::Lattice { file } => {
            let sc = load_chain(file)?;
            Ok(lattice_report(&generate_lattice(&sc, &limits)?, o.seed()))
        }
        SierpinskiCmd::NormalForm {
            file,
            member,
            intersect,
        } => {
            let sc = load_chain(file)?;
            let gl = generate_lattice(&sc, &limits)?;
            let base = gl.base();
            if let Some(xs) = intersect {
                let xs = label_list(xs)
                    .iter()
                    .map(|l| base.index_of(l))
                    .collect::<Result<Vec<_>, _>>()?;
                let (i, j) = normalize_intersection(&sc, &xs)?;
                let set = labels(
                    base,
                    ordergap::sierpinski::intersection_of_ideals(base, &[i, j])?.iter(),
                );
                let text = format!(
                    "omega-least {}, real-least {}, intersection {{{}}}\n",
                    base.label(i),
                    base.label(j),
                    set.join(",")
                );
                let json = json!({
                    "points": labels(base, xs.iter().copied()),
                    "omegaLeast": base.label(i),
                    "realLeast": base.label(j),
                    "intersection": set,
                });
                return Ok(Report::new(json, text, true));
            }
            let member = gl.member_from_labels(&label_list(member.as_deref().unwrap_or_default()))?;
            let terms = normal_form(&gl, &member, &limits)?;
            let pairs: Vec<[&str; 2]> = terms.iter().map(|&(x, y)| [base.label(x), base.label(y)]).collect();
            let shown: Vec<String> = pairs.iter().map(|[x, y]| format!("({x},{y})")).collect();
            let member_labels = labels(base, member.iter());
            let text = format!(
                "{{{}}} = {}\n",
                member_labels.join(","),
                if shown.is_empty() {
                    "empty union".into()
                } else {
                    shown.join(" u ")
                }
            );
            Ok(Report::new(
                json!({ "member": member_labels, "terms": pairs }),
                text,
                true,
            ))
        }
    }
}

fn sets(literals: &[String]) -> Result<Vec<PeriodicSet>, Failure> {
    Ok(literals
        .iter()
        .map(|s| s.parse())
        .collect::<Result<Vec<PeriodicSet>, _>>()?)
}

fn branches(literals: &[String]) -> Result<Vec<Branch>, Failure> {
    Ok(literals.iter().map(|s| s.parse()).collect::<Result<Vec<Branch>, _>>()?)
}

fn bound_text(b: Option<i64>) -> String {
    b.map_or("none".into(), |b| b.to_string())
}

fn node_set_json(s: &NodeSet) -> Value {
    match s.finite_nodes() {
        Some(nodes) => json!({
            "finite": true,
            "nodes": nodes.iter().map(|n| ordergap::modfin::node_label(n)).collect::<Vec<_>>(),
        }),
        None => json!({ "finite": false, "strands": s.strands() }),
    }
}

fn fsigma_report(sep: &FsigmaSeparation) -> Report {
    let mut text = format!("k = {}\nseparator {}\n", sep.k, sep.separator.describe());
    text.push_str("side index holds\n");
    for r in &sep.audit {
        writeln!(text, "{:<4} {:<5} {}", r.side, r.index, r.holds).unwrap();
    }
    let json = json!({
        "k": sep.k,
        "separator": sep.separator.describe(),
        "separatorSet": node_set_json(&sep.separator),
        "audit": sep.audit,
    });
    Report::new(json, text, sep.passes())
}

pub fn modfin(cmd: &ModfinCmd, _o: &Options) -> Outcome {
    match cmd {
        ModfinCmd::Leq { x, y } => {
            let (x, y): (PeriodicSet, PeriodicSet) = (x.parse()?, y.parse()?);
            let r = leq_fin(&x, &y);
            let text = match r.exception_bound() {
                Some(b) => format!("{x} <=Fin {y}, exceptions up to {}\n", bound_text(Some(b))),
                None => format!(
                    "{x} is not <=Fin {y}: the difference {} is infinite\n",
                    x.difference(&y)
                ),
            };
            Ok(Report::new(
                json!({ "holds": r.holds(), "exceptionBound": r.exception_bound() }),
                text,
                r.holds(),
            ))
        }
        ModfinCmd::Separate { a, b } => {
            let sep = hadamard_separator(&sets(a)?, &sets(b)?)?;
            let mut text = format!("{}\nside index holds exceptions\n", sep.separator);
            for r in &sep.audit {
                writeln!(
                    text,
                    "{:<4} {:<5} {:<5} {}",
                    r.side,
                    r.index,
                    r.holds,
                    bound_text(r.exception_bound)
                )
                .unwrap();
            }
            let audit: Vec<Value> = sep
                .audit
                .iter()
                .map(|r| json!({ "side": r.side, "index": r.index, "holds": r.holds, "exceptionBound": r.exception_bound }))
                .collect();
            let json = json!({
                "separator": sep.separator.literal(),
                "bound": sep.bound,
                "audit": audit,
            });
            Ok(Report::new(json, text, sep.passes()))
        }
        ModfinCmd::Fsigma { a, b } => Ok(fsigma_report(&fsigma_separator(&branches(a)?, &branches(b)?)?)),
        ModfinCmd::Luzin { branch } => {
            let b: Branch = branch.parse()?;
            let (left, right) = luzin_pair(&b);
            let text = format!("branch {b}\nA' {}\nB' {}\n", left.describe(), right.describe());
            let json = json!({
                "branch": b.literal(),
                "A": left.describe(),
                "B": right.describe(),
                "strandsA": left.strands(),
                "strandsB": right.strands(),
            });
            Ok(Report::new(json, text, true))
        }
        ModfinCmd::CheckOp { d } => {
            let s = check_operator(&branches(d)?)?;
            let mut json = node_set_json(&s);
            json["describe"] = Value::String(s.describe());
            Ok(Report::new(json, s.describe() + "\n", true))
        }
    }
}

pub fn render(cmd: &RenderCmd, o: &Options) -> Outcome {
    let RenderCmd::Dot { file } = cmd;
    let text = read(file)?;
    let (p, name) = match PosetDocument::parse(&text) {
        Ok(doc) => (doc.to_poset()?, "P"),
        Err(poset_err) => match SierpinskiDocument::parse(&text) {
            Ok(doc) => (generate_lattice(&doc.to_chain()?, &o.limits())?.poset(), "L"),
            Err(_) => return Err(poset_err.into()),
        },
    };
    let dot = render_dot(&p, name);
    let json = json!({ "nodes": p.len(), "edges": p.covers().len(), "dot": dot });
    let mut r = Report::new(json, dot.clone(), true);
    r.dot = Some(dot);
    if o.expect_lattice() && !p.is_lattice().is_lattice() {
        r.code = 1;
    }
    Ok(r)
}
