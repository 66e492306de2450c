use crate::resolve::BettiTable;

/// Betti diagram with row `j - i` and column `i`; zero entries print as dots.
pub fn render_betti(t: &BettiTable) -> String {
    let pd = t.pd();
    let (lo, hi) = (t.min_row().min(0), t.regularity().max(0));
    let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
    let totals: Vec<String> = (0..=pd).map(|i| cell(t.total(i))).collect();
    let width = totals.iter().map(String::len).max().unwrap_or(1);
    let label = |s: &str| format!("{s:>6}");
    let join = |cells: Vec<String>| cells.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ");
    let mut out = Vec::new();
    out.push(format!("{} {}", label(""), join((0..=pd).map(|i| i.to_string()).collect())));
    out.push(format!("{} {}", label("total:"), join(totals.clone())));
    for r in lo..=hi {
        let cells = (0..=pd).map(|i| cell(t.get(i, i as i32 + r))).collect();
        out.push(format!("{} {}", label(&format!("{r}:")), join(cells)));
    }
    out.join("\n") + "\n"
}

pub fn betti_json(t: &BettiTable) -> String {
    serde_json::to_string_pretty(t).expect("serializable")
}
