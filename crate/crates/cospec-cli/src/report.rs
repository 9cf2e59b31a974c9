//! Machine-readable report documents. Field order is fixed by the struct
//! declarations; the JSON shape is described by `docs/report-schema.json`.

use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    pub timing_ms: u128,
    pub result: ReportResult,
}

#[derive(Serialize)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Charpoly {
        method: String,
        polynomial: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        roots: Option<Vec<f64>>,
    },
    Mates {
        exhaustive: bool,
        target_polynomial: String,
        ds: bool,
        mates: Vec<MateEntry>,
    },
    Forbidden {
        all_clear: bool,
        patterns: Vec<PatternEntry>,
    },
    Decompose {
        sizes: [usize; 4],
        path: [usize; 4],
        isolated: usize,
        classification: String,
    },
}

#[derive(Serialize)]
pub struct MateEntry {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
}

#[derive(Serialize)]
pub struct PatternEntry {
    pub pattern: String,
    pub present: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering carrying the same numbers as the JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            ReportResult::Charpoly { polynomial, roots, .. } => {
                out.push_str(polynomial);
                out.push('\n');
                if let Some(roots) = roots {
                    let rendered: Vec<String> = roots.iter().map(|r| format!("{r:.9}")).collect();
                    out.push_str(&format!("roots: {}\n", rendered.join(" ")));
                }
            }
            ReportResult::Mates {
                exhaustive,
                target_polynomial,
                ds,
                mates,
            } => {
                if let Some(g6) = &self.input.graph6 {
                    out.push_str(&format!(
                        "target: {g6} ({} vertices, {} edges)\n",
                        self.input.vertices, self.input.edges
                    ));
                }
                out.push_str(&format!("polynomial: {target_polynomial}\n"));
                out.push_str(&format!("exhaustive: {exhaustive}\n"));
                out.push_str(&format!("mates: {}\n", mates.len()));
                for mate in mates {
                    match &mate.classification {
                        Some(c) => out.push_str(&format!("  {} {}\n", mate.graph6, c)),
                        None => out.push_str(&format!("  {}\n", mate.graph6)),
                    }
                }
                out.push_str(&format!("ds: {ds}\n"));
            }
            ReportResult::Forbidden { all_clear, patterns } => {
                for p in patterns {
                    match &p.witness {
                        Some(w) => out.push_str(&format!("{}: present {w:?}\n", p.pattern)),
                        None => out.push_str(&format!("{}: absent\n", p.pattern)),
                    }
                }
                out.push_str(&format!("all clear: {all_clear}\n"));
            }
            ReportResult::Decompose {
                sizes,
                path,
                isolated,
                classification,
            } => {
                out.push_str(&format!(
                    "sizes: A={} B={} C={} D={}\npath: {}-{}-{}-{}\nisolated: {isolated}\nclassification: {classification}\n",
                    sizes[0], sizes[1], sizes[2], sizes[3], path[0], path[1], path[2], path[3]
                ));
            }
        }
        out
    }
}
