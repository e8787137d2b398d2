//! Command-line front end: `enumerate`, `count`, `verify` and `apply`
//! subcommands over the library. All output is deterministic: identical
//! invocations produce byte-identical output.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::bijections::{self, RemyResult, RemyTag};
use crate::codec;
use crate::counting::{CountTable, Provenance, Recurrences, TableKey};
use crate::enumerate::{count_maps, enumerate_maps, EnumFilter, Family, GroupBy};
use crate::explore;
use crate::identities::{Verifier, VerifyParams, CATALOG};
use crate::map::{Mark, RootedMap};

#[derive(Parser)]
#[command(
    name = "maps",
    about = "Rooted combinatorial maps: enumeration, bijections and exact identity checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Maps,
    Precubic,
    Cubic,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::Maps => Family::All,
            FamilyArg::Precubic => Family::Precubic,
            FamilyArg::Cubic => Family::Cubic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    None,
    Faces,
    Genus,
    FacesGenus,
    DegreeProfile,
}

impl GroupArg {
    fn group_by(self) -> GroupBy {
        match self {
            GroupArg::None => GroupBy::None,
            GroupArg::Faces => GroupBy::Faces,
            GroupArg::Genus => GroupBy::Genus,
            GroupArg::FacesGenus => GroupBy::FacesGenus,
            GroupArg::DegreeProfile => GroupBy::DegreeProfile,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enum,
    Recurrence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpArg {
    Explore,
    CutSlide,
    CutSlideInv,
    Split,
    Unsplit,
    Remy,
    RemyInv,
    LeafRetract,
    LeafExpand,
    PrecubicLeafRetract,
    PrecubicLeafExpand,
    Contract,
    Grow,
    Dual,
    Canonical,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generate every rooted map with the given number of edges, one per line.
    Enumerate {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        faces: Option<usize>,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long, value_enum, default_value = "maps")]
        family: FamilyArg,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Print grouped counts instead of the maps.
        #[arg(long)]
        counts: bool,
        #[arg(long, value_enum, default_value = "none")]
        group_by: GroupArg,
        #[arg(long)]
        json: bool,
        /// Abort after this many search nodes.
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
    /// Count maps by exhaustive enumeration or by the recurrences.
    Count {
        #[arg(long, value_enum, default_value = "maps")]
        family: FamilyArg,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        faces: Option<usize>,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long, value_enum, default_value = "enum")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "none")]
        group_by: GroupArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Persistent count cache (JSON); also via MAPS_CACHE_DIR.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check counting identities exactly; nonzero exit on any failure.
    Verify {
        /// Identity name or `all`.
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, default_value_t = 2)]
        max_genus: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget_nodes: Option<u64>,
        /// Stop starting new identities after this many seconds.
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Apply an operation to a map file (pairs via --in2).
    Apply {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "in2")]
        input2: Option<PathBuf>,
        /// First output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Second output file for splitting operations.
        #[arg(long)]
        out2: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Entry point used by the `maps` binary. Exit codes: 0 on success, 1 when
/// an identity fails, 2 on usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Enumerate {
            edges,
            faces,
            genus,
            family,
            max_degree,
            counts,
            group_by,
            json,
            budget_nodes,
        } => {
            let filter = EnumFilter {
                faces,
                genus,
                family: family.family(),
                max_degree,
            };
            if counts {
                let table = count_maps(edges, &filter, group_by.group_by(), budget_nodes)
                    .map_err(|e| e.to_string())?;
                print_count_table(&table_to_strings(table), json);
            } else {
                let maps = enumerate_maps(edges, &filter, budget_nodes).map_err(|e| e.to_string())?;
                for map in &maps {
                    println!("{}", stream_line(map));
                }
            }
            Ok(0)
        }
        Command::Count {
            family,
            edges,
            faces,
            genus,
            method,
            group_by,
            json,
            budget_nodes,
            cache,
        } => run_count(
            family,
            edges,
            faces,
            genus,
            method,
            group_by,
            json,
            budget_nodes,
            cache_path(cache),
        ),
        Command::Verify {
            identity,
            max_edges,
            max_genus,
            json,
            budget_nodes,
            budget_seconds,
            cache,
        } => run_verify(
            &identity,
            VerifyParams {
                max_edges,
                max_genus,
                budget: budget_nodes,
            },
            budget_seconds,
            json,
            cache_path(cache),
        ),
        Command::Apply {
            op,
            input,
            input2,
            out,
            out2,
            json,
        } => run_apply(op, &input, input2.as_deref(), out.as_deref(), out2.as_deref(), json),
    }
}

fn cache_path(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| {
        std::env::var_os("MAPS_CACHE_DIR")
            .map(|dir| PathBuf::from(dir).join("counts.json"))
    })
}

fn stream_line(map: &RootedMap) -> String {
    codec::encode(map, &[]).trim_end().replace('\n', "; ")
}

fn table_to_strings(table: BTreeMap<crate::enumerate::CountKey, num_bigint::BigUint>) -> Vec<(String, String)> {
    table
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn print_count_table(rows: &[(String, String)], json: bool) {
    if json {
        let object: BTreeMap<&str, &str> = rows
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect();
        println!("{}", serde_json::to_string_pretty(&object).unwrap());
    } else if rows.len() == 1 && rows[0].0 == "total" {
        println!("{}", rows[0].1);
    } else {
        for (k, v) in rows {
            println!("{k}: {v}");
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_count(
    family: FamilyArg,
    edges: usize,
    faces: Option<usize>,
    genus: Option<usize>,
    method: MethodArg,
    group_by: GroupArg,
    json: bool,
    budget: Option<u64>,
    cache: Option<PathBuf>,
) -> Result<i32, String> {
    let mut cache_table = load_cache(cache.as_deref())?;
    let rows: Vec<(String, String)> = match method {
        MethodArg::Enum => {
            let filter = EnumFilter {
                faces,
                genus,
                family: family.family(),
                max_degree: None,
            };
            let table =
                count_maps(edges, &filter, group_by.group_by(), budget).map_err(|e| e.to_string())?;
            if let (Some(entries), Some(f), Some(g)) = (cache_table.as_mut(), faces, genus) {
                if group_by == GroupArg::None && family == FamilyArg::Maps {
                    let value: BigInt = table
                        .values()
                        .map(|v| BigInt::from(v.clone()))
                        .sum();
                    entries
                        .insert(
                            TableKey::QFull { n: edges, f, g },
                            &value,
                            Provenance::Enumeration,
                        )
                        .map_err(|e| e.to_string())?;
                }
            }
            table_to_strings(table)
        }
        MethodArg::Recurrence => {
            let rec = Recurrences::new();
            let n = edges as i64;
            let value: BigInt = match family {
                FamilyArg::Maps => match (faces, genus) {
                    (Some(f), Some(g)) => rec.q_full(n, f as i64, g as i64),
                    (Some(f), None) => (0..=n).map(|g| rec.q_full(n, f as i64, g)).sum(),
                    (None, Some(g)) => (1..=n + 1).map(|f| rec.q_full(n, f, g as i64)).sum(),
                    (None, None) => {
                        let mut total = BigInt::zero();
                        for f in 1..=n + 1 {
                            for g in 0..=n {
                                total += rec.q_full(n, f, g);
                            }
                        }
                        total
                    }
                },
                FamilyArg::Cubic => {
                    if edges % 3 != 0 {
                        BigInt::zero()
                    } else {
                        let m = n / 3;
                        match genus {
                            Some(g) => rec.t_full(m, g as i64),
                            None => (0..=m).map(|g| rec.t_full(m, g)).sum(),
                        }
                    }
                }
                FamilyArg::Precubic => {
                    return Err(
                        "no recurrence computes precubic counts; use --method enum".to_string()
                    )
                }
            };
            if let (Some(entries), Some(f), Some(g)) = (cache_table.as_mut(), faces, genus) {
                if family == FamilyArg::Maps {
                    entries
                        .insert(
                            TableKey::QFull { n: edges, f, g },
                            &value,
                            Provenance::Recurrence,
                        )
                        .map_err(|e| e.to_string())?;
                }
            }
            vec![("total".to_string(), value.to_string())]
        }
    };
    print_count_table(&rows, json);
    save_cache(cache.as_deref(), cache_table.as_ref())?;
    Ok(0)
}

fn load_cache(path: Option<&std::path::Path>) -> Result<Option<CountTable>, String> {
    match path {
        None => Ok(None),
        Some(p) if p.exists() => CountTable::load(p).map(Some).map_err(|e| e.to_string()),
        Some(_) => Ok(Some(CountTable::default())),
    }
}

fn save_cache(path: Option<&std::path::Path>, table: Option<&CountTable>) -> Result<(), String> {
    if let (Some(p), Some(t)) = (path, table) {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        }
        t.save(p).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run_verify(
    identity: &str,
    params: VerifyParams,
    budget_seconds: Option<u64>,
    json: bool,
    cache: Option<PathBuf>,
) -> Result<i32, String> {
    let started = std::time::Instant::now();
    let verifier = Verifier::new(params).map_err(|e| e.to_string())?;
    let in_budget = |started: std::time::Instant| match budget_seconds {
        Some(s) => started.elapsed().as_secs() < s,
        None => true,
    };
    let reports = if identity == "all" {
        let mut all = Vec::new();
        for id in CATALOG {
            if !in_budget(started) {
                eprintln!("time budget exhausted before `{id}`");
                return Ok(2);
            }
            all.extend(verifier.verify(id).map_err(|e| e.to_string())?);
        }
        all
    } else {
        if !CATALOG.contains(&identity) {
            return Err(format!(
                "unknown identity `{identity}`; known: all, {}",
                CATALOG.join(", ")
            ));
        }
        verifier.verify(identity).map_err(|e| e.to_string())?
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).unwrap());
    } else {
        for r in &reports {
            let status = if r.ok { "ok" } else { "FAIL" };
            println!("[{status}] {} {}: {} = {}", r.identity, r.point, r.lhs, r.rhs);
            if let Some(witness) = &r.counterexample {
                println!("  counterexample:\n{}", indent(witness));
            }
        }
    }
    if let Some(path) = cache {
        let mut table = load_cache(Some(&path))?.unwrap_or_default();
        let merged = crate::counting::merge_provenances(&verifier.tables, &verifier.rec)
            .map_err(|e| e.to_string())?;
        for (key, entry) in merged.entries {
            table.entries.entry(key).or_insert(entry);
        }
        save_cache(Some(&path), Some(&table))?;
    }
    Ok(if reports.iter().all(|r| r.ok) { 0 } else { 1 })
}

fn indent(text: &str) -> String {
    text.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn read_map(path: &std::path::Path) -> Result<(RootedMap, Vec<Mark>), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    codec::decode(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_map(
    path: Option<&std::path::Path>,
    map: &RootedMap,
    marks: &[Mark],
) -> Result<(), String> {
    let text = codec::encode(map, marks);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn find_mark<'a, F: Fn(&Mark) -> bool>(marks: &'a [Mark], keep: F, what: &str) -> Result<&'a Mark, String> {
    marks
        .iter()
        .find(|m| keep(m))
        .ok_or_else(|| format!("input file carries no {what} mark"))
}

fn run_apply(
    op: OpArg,
    input: &std::path::Path,
    input2: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
    out2: Option<&std::path::Path>,
    json: bool,
) -> Result<i32, String> {
    let (map, marks) = read_map(input)?;
    let second = input2.map(read_map).transpose()?;
    let err = |e: bijections::BijectionError| e.to_string();
    match op {
        OpArg::Explore => {
            let expl = explore::explore(&map).map_err(|e| e.to_string())?;
            let report = expl.report();
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("corner labels: {:?}", report.corner_labels);
                for d in &report.discoveries {
                    println!(
                        "discovery {}: dart {} at vertex {} leaves face {} entering face {}",
                        d.rank, d.dart, d.vertex, d.left_face, d.entered_face
                    );
                }
                for (face, parent) in &report.face_parent {
                    println!("face {face} has parent {parent}");
                }
            }
            Ok(0)
        }
        OpArg::CutSlide | OpArg::Split => {
            let rank = match find_mark(&marks, |m| matches!(m, Mark::Discovery(_)), "discovery")? {
                Mark::Discovery(rank) => *rank,
                _ => unreachable!(),
            };
            let result = if op == OpArg::CutSlide {
                bijections::cut_and_slide(&map, rank).map_err(err)?
            } else {
                bijections::split_at_disconnecting(&map, rank).map_err(err)?
            };
            write_map(out, &result.m1, &[Mark::Vertex(result.m1_vertex)])?;
            write_map(out2, &result.m2, &[Mark::Leaf(result.m2_leaf)])?;
            Ok(0)
        }
        OpArg::CutSlideInv | OpArg::Unsplit => {
            let (m2, marks2) = second.ok_or("this operation needs --in2")?;
            let m1_vertex = match find_mark(&marks, |m| matches!(m, Mark::Vertex(_)), "vertex")? {
                Mark::Vertex(v) => *v,
                _ => unreachable!(),
            };
            let m2_leaf = match find_mark(&marks2, |m| matches!(m, Mark::Leaf(_)), "leaf")? {
                Mark::Leaf(d) => *d,
                _ => unreachable!(),
            };
            let (rebuilt, rank) = if op == OpArg::CutSlideInv {
                bijections::cut_and_slide_inverse(&map, m1_vertex, &m2, m2_leaf).map_err(err)?
            } else {
                bijections::unsplit(&map, m1_vertex, &m2, m2_leaf).map_err(err)?
            };
            write_map(out, &rebuilt, &[Mark::Discovery(rank)])?;
            Ok(0)
        }
        OpArg::Remy => {
            let mark = match find_mark(&marks, |m| matches!(m, Mark::Vertex(_)), "vertex")? {
                Mark::Vertex(v) => *v,
                _ => unreachable!(),
            };
            match bijections::remy_forward(&map, mark).map_err(err)? {
                RemyResult::Corner { map, slot, tag } => {
                    eprintln!(
                        "corner case ({})",
                        match tag {
                            RemyTag::LeafRetraction => "leaf retraction",
                            RemyTag::NodeContraction => "node contraction",
                        }
                    );
                    write_map(out, &map, &[Mark::Corner(slot)])?;
                }
                RemyResult::Pair {
                    m1,
                    m1_vertex,
                    m2,
                    m2_vertex,
                } => {
                    write_map(out, &m1, &[Mark::Vertex(m1_vertex)])?;
                    write_map(out2, &m2, &[Mark::Vertex(m2_vertex)])?;
                }
            }
            Ok(0)
        }
        OpArg::RemyInv => {
            let result = match second {
                Some((m2, marks2)) => {
                    let m1_vertex =
                        match find_mark(&marks, |m| matches!(m, Mark::Vertex(_)), "vertex")? {
                            Mark::Vertex(v) => *v,
                            _ => unreachable!(),
                        };
                    let m2_vertex =
                        match find_mark(&marks2, |m| matches!(m, Mark::Vertex(_)), "vertex")? {
                            Mark::Vertex(v) => *v,
                            _ => unreachable!(),
                        };
                    RemyResult::Pair {
                        m1: map,
                        m1_vertex,
                        m2,
                        m2_vertex,
                    }
                }
                None => {
                    let slot = match find_mark(&marks, |m| matches!(m, Mark::Corner(_)), "corner")? {
                        Mark::Corner(slot) => *slot,
                        _ => unreachable!(),
                    };
                    RemyResult::Corner {
                        map,
                        slot,
                        tag: RemyTag::NodeContraction,
                    }
                }
            };
            let (rebuilt, mark) = bijections::remy_inverse(&result).map_err(err)?;
            write_map(out, &rebuilt, &[Mark::Vertex(mark)])?;
            Ok(0)
        }
        OpArg::LeafRetract => {
            let leaf = match find_mark(&marks, |m| matches!(m, Mark::Leaf(_)), "leaf")? {
                Mark::Leaf(d) => *d,
                _ => unreachable!(),
            };
            let (retracted, slot) = bijections::leaf_retract(&map, leaf).map_err(err)?;
            write_map(out, &retracted, &[Mark::Corner(slot)])?;
            Ok(0)
        }
        OpArg::LeafExpand => {
            let slot = match find_mark(&marks, |m| matches!(m, Mark::Corner(_)), "corner")? {
                Mark::Corner(slot) => *slot,
                _ => unreachable!(),
            };
            let (expanded, leaf) = bijections::leaf_expand(&map, slot).map_err(err)?;
            write_map(out, &expanded, &[Mark::Leaf(leaf)])?;
            Ok(0)
        }
        OpArg::PrecubicLeafRetract => {
            let leaf = match find_mark(&marks, |m| matches!(m, Mark::Leaf(_)), "leaf")? {
                Mark::Leaf(d) => *d,
                _ => unreachable!(),
            };
            let (retracted, side) = bijections::precubic_leaf_retract(&map, leaf).map_err(err)?;
            write_map(out, &retracted, &[Mark::SideEdge(side)])?;
            Ok(0)
        }
        OpArg::PrecubicLeafExpand => {
            let side = match find_mark(&marks, |m| matches!(m, Mark::SideEdge(_)), "side-edge")? {
                Mark::SideEdge(d) => *d,
                _ => unreachable!(),
            };
            let (expanded, leaf) = bijections::precubic_leaf_expand(&map, side).map_err(err)?;
            write_map(out, &expanded, &[Mark::Leaf(leaf)])?;
            Ok(0)
        }
        OpArg::Contract => {
            let mark = match find_mark(&marks, |m| matches!(m, Mark::Vertex(_)), "vertex")? {
                Mark::Vertex(v) => *v,
                _ => unreachable!(),
            };
            let (contracted, slot) = bijections::contract_last_edge(&map, mark).map_err(err)?;
            write_map(out, &contracted, &[Mark::Corner(slot)])?;
            Ok(0)
        }
        OpArg::Grow => {
            let slot = match find_mark(&marks, |m| matches!(m, Mark::Corner(_)), "corner")? {
                Mark::Corner(slot) => *slot,
                _ => unreachable!(),
            };
            let (grown, mark) = bijections::grow_edge(&map, slot).map_err(err)?;
            write_map(out, &grown, &[Mark::Vertex(mark)])?;
            Ok(0)
        }
        OpArg::Dual => {
            write_map(out, &map.dual(), &[])?;
            Ok(0)
        }
        OpArg::Canonical => {
            write_map(out, &map.canonicalize(), &[])?;
            Ok(0)
        }
        OpArg::Dot => {
            let mut dot = String::from("graph map {\n");
            for e in 0..map.n_edges() {
                let u = map.vertex_of(2 * e).0;
                let v = map.vertex_of(2 * e + 1).0;
                dot.push_str(&format!("  v{u} -- v{v};\n"));
            }
            if let Some(r) = map.root_dart() {
                dot.push_str(&format!("  v{} [shape=doublecircle];\n", map.vertex_of(r).0));
            }
            dot.push('}');
            match out {
                Some(p) => std::fs::write(p, dot).map_err(|e| e.to_string())?,
                None => println!("{dot}"),
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        run(std::iter::once("maps").chain(args.iter().copied()))
    }

    #[test]
    fn count_planar_two_edge_maps() {
        // prints 9; here we only check the exit code path
        assert_eq!(
            run_args(&[
                "count", "--family", "maps", "--edges", "2", "--genus", "0", "--method", "enum"
            ]),
            0
        );
    }

    #[test]
    fn verify_small_identity_passes() {
        assert_eq!(
            run_args(&["verify", "--identity", "cut-slide", "--max-edges", "3"]),
            0
        );
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run_args(&["bogus"]), 2);
        assert_eq!(run_args(&["verify", "--identity", "nope"]), 2);
    }

    #[test]
    fn verify_json_output_is_deterministic() {
        let params = VerifyParams {
            max_edges: 2,
            max_genus: 1,
            budget: None,
        };
        let a = Verifier::new(params).unwrap().verify("dual").unwrap();
        let b = Verifier::new(params).unwrap().verify("dual").unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn apply_cut_slide_on_the_loop() {
        let dir = std::env::temp_dir().join("rooted-maps-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let input = dir.join("loop.map");
        let loop_map = RootedMap::build(1, vec![1, 0], Some(0)).unwrap();
        std::fs::write(&input, codec::encode(&loop_map, &[Mark::Discovery(0)])).unwrap();
        let out1 = dir.join("m1.map");
        let out2 = dir.join("m2.map");
        let code = run_args(&[
            "apply",
            "--op",
            "cut-slide",
            "--in",
            input.to_str().unwrap(),
            "--out",
            out1.to_str().unwrap(),
            "--out2",
            out2.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let (m1, marks1) = codec::decode(&std::fs::read_to_string(&out1).unwrap()).unwrap();
        let (m2, marks2) = codec::decode(&std::fs::read_to_string(&out2).unwrap()).unwrap();
        assert_eq!(m1, RootedMap::vertex_map());
        assert_eq!(marks1, vec![Mark::Vertex(None)]);
        assert_eq!(m2.n_edges(), 1);
        assert!(matches!(marks2[..], [Mark::Leaf(_)]));
        let _ = std::fs::remove_dir_all(&dir);
    }
}
