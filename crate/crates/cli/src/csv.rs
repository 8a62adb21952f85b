use mcdm::analysis::AnalysisRow;

pub const HEADER: &str = "n,kind,m_star,k,rate,div_base,div_actual,pc1,method,samples,seed,workers";

/// Renders rows with a trailing newline per line. Floats use the shortest
/// representation that round-trips, so equal inputs give identical bytes.
pub fn render(rows: &[AnalysisRow]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in rows {
        let opt = |v: Option<String>| v.unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.kind,
            opt(r.m_star.map(|m| m.to_string())),
            r.k,
            r.rate(),
            r.div_base,
            r.div_actual,
            r.pc1,
            r.method.as_str(),
            r.samples,
            opt(r.seed.map(|s| s.to_string())),
            r.workers
        ));
    }
    out
}
