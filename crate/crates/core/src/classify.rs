//! Class records, their ordering and numbering, and table output.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{orbit_measure_bounds, propagate_bounds, LevelBounds, MeasureBounds};
use crate::error::{check_size, Error, Result};
use crate::graph::{
    canonical_form, from_graph6, to_graph6, CanonicalForm, Graph, CONNECTED_GRAPH_COUNTS,
};
use crate::invariants::{orbit_two_colorable, rank_indexes, PersistencySolver, RankIndexSet};
use crate::lc::{enumerate_orbits, local_complement_unchecked, OrbitRecord};

pub const MIN_CLASSIFY: usize = 2;
pub const MAX_CLASSIFY: usize = 8;

/// One LC class with its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub number: usize,
    pub lc_size: usize,
    pub min_edges: usize,
    pub bounds: MeasureBounds,
    pub rank_indexes: RankIndexSet,
    pub two_colorable: bool,
    pub representative: Graph,
    /// Position of the orbit in its level's orbit list.
    pub orbit: usize,
}

impl ClassRecord {
    pub fn n(&self) -> usize {
        self.representative.n()
    }

    /// Rank indexes listed in the table, `RI_{floor(n/2)}` down to `RI_2`.
    pub fn table_ris(&self) -> Vec<(usize, Vec<u32>)> {
        (2..=self.rank_indexes.max_p())
            .rev()
            .map(|p| (p, self.rank_indexes.ri(p)))
            .collect()
    }

    fn sort_key_cmp(&self, other: &Self) -> Ordering {
        self.min_edges
            .cmp(&other.min_edges)
            .then(self.bounds.lower.cmp(&other.bounds.lower))
            .then(other.bounds.is_exact().cmp(&self.bounds.is_exact()))
            .then_with(|| {
                let a: Vec<_> = self.table_ris().into_iter().map(|(_, r)| r).collect();
                let b: Vec<_> = other.table_ris().into_iter().map(|(_, r)| r).collect();
                a.cmp(&b)
            })
            .then(self.lc_size.cmp(&other.lc_size))
            .then_with(|| {
                CanonicalForm::of_labeled(&self.representative)
                    .cmp(&CanonicalForm::of_labeled(&other.representative))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Run the edge/vertex-rule fixed point after the per-orbit bounds.
    pub propagate: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { propagate: true }
    }
}

/// Classes for every vertex count from 2 up to some maximum.
#[derive(Clone, Debug)]
pub struct Atlas {
    levels: Vec<LevelBounds>,
    classes: Vec<Vec<ClassRecord>>,
    lookup: HashMap<CanonicalForm, (usize, usize)>,
}

impl Atlas {
    pub fn build(max_n: usize, opts: ClassifyOptions) -> Result<Atlas> {
        Atlas::build_with(max_n, opts, enumerate_orbits)
    }

    /// Like [`Atlas::build`], with orbits supplied by `orbits_for` (e.g.
    /// from a cache).
    pub fn build_with<F>(max_n: usize, opts: ClassifyOptions, mut orbits_for: F) -> Result<Atlas>
    where
        F: FnMut(usize) -> Result<Vec<OrbitRecord>>,
    {
        check_size(max_n, MIN_CLASSIFY, MAX_CLASSIFY)?;
        let solver = PersistencySolver::new();
        let mut levels: Vec<LevelBounds> = Vec::new();
        for n in MIN_CLASSIFY..=max_n {
            let orbits = orbits_for(n)?;
            check_partition(n, &orbits)?;
            let bounds = orbits
                .par_iter()
                .map(|o| orbit_measure_bounds(o, &solver))
                .collect::<Result<Vec<_>>>()?;
            levels.push(LevelBounds { n, orbits, bounds });
            if opts.propagate {
                let target = levels.len() - 1;
                propagate_bounds(&mut levels, target)?;
            }
        }
        let mut classes = Vec::with_capacity(levels.len());
        let mut next_number = 1;
        for level in &levels {
            let mut records: Vec<ClassRecord> = level
                .orbits
                .par_iter()
                .zip(&level.bounds)
                .enumerate()
                .map(|(i, (o, b))| ClassRecord {
                    number: 0,
                    lc_size: o.lc_size(),
                    min_edges: o.min_edges(),
                    bounds: b.clone(),
                    rank_indexes: rank_indexes(&o.representative),
                    two_colorable: orbit_two_colorable(o),
                    representative: o.representative,
                    orbit: i,
                })
                .collect();
            records.sort_by(|a, b| a.sort_key_cmp(b));
            for r in &mut records {
                r.number = next_number;
                next_number += 1;
            }
            classes.push(records);
        }
        let mut lookup = HashMap::new();
        for (li, (level, records)) in levels.iter().zip(&classes).enumerate() {
            for (ri, r) in records.iter().enumerate() {
                for &m in &level.orbits[r.orbit].members {
                    lookup.insert(m, (li, ri));
                }
            }
        }
        Ok(Atlas {
            levels,
            classes,
            lookup,
        })
    }

    pub fn max_n(&self) -> usize {
        self.levels.last().map_or(0, |l| l.n)
    }

    fn level_index(&self, n: usize) -> Result<usize> {
        if n < MIN_CLASSIFY || n > self.max_n() {
            return Err(Error::UnsupportedSize {
                n,
                min: MIN_CLASSIFY,
                max: self.max_n(),
            });
        }
        Ok(n - MIN_CLASSIFY)
    }

    pub fn classes(&self, n: usize) -> Result<&[ClassRecord]> {
        Ok(&self.classes[self.level_index(n)?])
    }

    pub fn orbits(&self, n: usize) -> Result<&[OrbitRecord]> {
        Ok(&self.levels[self.level_index(n)?].orbits)
    }

    pub fn orbit_of(&self, record: &ClassRecord) -> &OrbitRecord {
        &self.levels[record.n() - MIN_CLASSIFY].orbits[record.orbit]
    }

    /// The class containing `g`.
    pub fn lookup(&self, g: &Graph) -> Result<&ClassRecord> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let (li, ri) = self
            .lookup
            .get(&canonical_form(g))
            .ok_or(Error::NotInAtlas { n: g.n() })?;
        Ok(&self.classes[*li][*ri])
    }
}

/// Orbits must be disjoint, each closed under local complementation, and
/// together cover every connected graph on `n` vertices.
fn check_partition(n: usize, orbits: &[OrbitRecord]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for o in orbits {
        for &m in &o.members {
            if m.n() != n || !seen.insert(m) {
                return Err(Error::Partition(format!(
                    "member {} repeated or misplaced",
                    to_graph6(&m.to_graph())
                )));
            }
        }
    }
    if seen.len() != CONNECTED_GRAPH_COUNTS[n] {
        return Err(Error::Partition(format!(
            "orbits cover {} graphs, expected {}",
            seen.len(),
            CONNECTED_GRAPH_COUNTS[n]
        )));
    }
    for o in orbits {
        for g in o.member_graphs() {
            for v in 0..n {
                let image = canonical_form(&local_complement_unchecked(&g, v));
                if !o.contains(&image) {
                    return Err(Error::Partition(format!(
                        "orbit of {} is not closed",
                        to_graph6(&o.representative)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Ordered, numbered classes of connected graphs on `n` vertices.
pub fn classify(n: usize) -> Result<Vec<ClassRecord>> {
    let atlas = Atlas::build(n, ClassifyOptions::default())?;
    Ok(atlas.classes(n)?.to_vec())
}

/// Class number of `g` in `atlas`.
pub fn lookup(g: &Graph, atlas: &Atlas) -> Result<usize> {
    atlas.lookup(g).map(|r| r.number)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(format!("unknown table format {s:?}")),
        }
    }
}

/// One rendered table row; what the CSV and JSON outputs carry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub no: usize,
    pub lc: usize,
    pub edges: usize,
    pub es_lower: u32,
    pub es_upper: u32,
    /// `(p, RI_p)` for `p = floor(n/2)` down to 2.
    #[serde(flatten, with = "ri_columns")]
    pub ris: Vec<(usize, Vec<u32>)>,
    pub two_colorable: bool,
    /// graph6.
    pub representative: String,
}

impl From<&ClassRecord> for TableRow {
    fn from(r: &ClassRecord) -> Self {
        TableRow {
            no: r.number,
            lc: r.lc_size,
            edges: r.min_edges,
            es_lower: r.bounds.lower,
            es_upper: r.bounds.upper,
            ris: r.table_ris(),
            two_colorable: r.two_colorable,
            representative: to_graph6(&r.representative),
        }
    }
}

impl TableRow {
    pub fn es(&self) -> String {
        if self.es_lower == self.es_upper {
            self.es_lower.to_string()
        } else {
            format!("{}<{}", self.es_lower, self.es_upper)
        }
    }

    /// e.g. `46,2,7,1,(0;0;0;35),(0;0;56),(0;28),yes`.
    pub fn to_csv(&self) -> String {
        let mut fields = vec![
            self.no.to_string(),
            self.lc.to_string(),
            self.edges.to_string(),
            self.es(),
        ];
        fields.extend(self.ris.iter().map(|(_, ri)| tuple(ri)));
        fields.push(if self.two_colorable { "yes" } else { "no" }.to_string());
        fields.join(",")
    }

    fn n(&self) -> Option<usize> {
        from_graph6(&self.representative).ok().map(|g| g.n())
    }
}

/// `ri4`, `ri3`, ... as separate JSON keys, largest `p` first.
mod ri_columns {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::{Map, Value};

    pub fn serialize<S: Serializer>(ris: &[(usize, Vec<u32>)], s: S) -> Result<S::Ok, S::Error> {
        let map: Map<String, Value> = ris
            .iter()
            .map(|(p, ri)| (format!("ri{p}"), Value::from(ri.clone())))
            .collect();
        map.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<(usize, Vec<u32>)>, D::Error> {
        let map = Map::<String, Value>::deserialize(d)?;
        let mut ris = Vec::new();
        for (key, value) in map {
            let Some(p) = key.strip_prefix("ri").and_then(|p| p.parse::<usize>().ok()) else {
                continue;
            };
            let ri: Vec<u32> = serde_json::from_value(value).map_err(D::Error::custom)?;
            ris.push((p, ri));
        }
        ris.sort_by_key(|r| std::cmp::Reverse(r.0));
        Ok(ris)
    }
}

fn tuple(values: &[u32]) -> String {
    let inner: Vec<String> = values.iter().map(u32::to_string).collect();
    format!("({})", inner.join(";"))
}

pub fn csv_row(r: &ClassRecord) -> String {
    TableRow::from(r).to_csv()
}

pub fn csv_header(n: usize) -> String {
    let mut cols = vec!["no".to_string(), "lc".into(), "edges".into(), "es".into()];
    cols.extend((2..=n / 2).rev().map(|p| format!("ri{p}")));
    cols.push("twocol".into());
    cols.join(",")
}

#[derive(Serialize, Deserialize)]
struct JsonAtlas {
    n: usize,
    classes: Vec<TableRow>,
}

/// Writes the records in the given format. Output is a pure function of the
/// records.
pub fn emit_table<W: Write>(records: &[ClassRecord], format: TableFormat, out: W) -> Result<()> {
    let n = records.first().map_or(0, |r| r.n());
    let rows: Vec<TableRow> = records.iter().map(TableRow::from).collect();
    emit_rows(n, &rows, format, out)
}

pub fn emit_rows<W: Write>(
    n: usize,
    rows: &[TableRow],
    format: TableFormat,
    mut out: W,
) -> Result<()> {
    match format {
        TableFormat::Csv => {
            writeln!(out, "{}", csv_header(n))?;
            for r in rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
        TableFormat::Json => {
            let atlas = JsonAtlas {
                n,
                classes: rows.to_vec(),
            };
            serde_json::to_writer_pretty(&mut out, &atlas)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Parses JSON written by [`emit_table`]; returns `n` and the rows.
pub fn read_json_table<R: Read>(input: R) -> Result<(usize, Vec<TableRow>)> {
    let atlas: JsonAtlas = serde_json::from_reader(input)?;
    if let Some(bad) = atlas.classes.iter().find(|r| r.n() != Some(atlas.n)) {
        return Err(Error::InconsistentBounds(format!(
            "class {} representative {:?} does not have {} vertices",
            bad.no, bad.representative, atlas.n
        )));
    }
    if let Some(bad) = atlas.classes.iter().find(|r| r.es_lower > r.es_upper) {
        return Err(Error::InconsistentBounds(format!(
            "class {} has lower bound {} above upper bound {}",
            bad.no, bad.es_lower, bad.es_upper
        )));
    }
    Ok((atlas.n, atlas.classes))
}
