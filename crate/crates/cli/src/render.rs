//! JSON, LaTeX and CSV renderings of computed objects.

use serde_json::{json, Map, Value};

use qplane_core::coeff::scalar_latex;
use qplane_core::intertwiners::CgTable;
use qplane_core::plane::{Basis, Poly};
use qplane_core::special::GridFunction;

/// One object in all three output formats.
pub struct Rendered {
    pub json: Value,
    pub latex: String,
    /// Rows including a header row.
    pub csv: Vec<Vec<String>>,
}

fn key_text<B: Basis>(key: B::Key) -> String {
    match B::render(key) {
        s if s.is_empty() => "1".into(),
        s => s,
    }
}

impl Rendered {
    pub fn poly<B: Basis>(p: &Poly<B>) -> Self {
        let mut csv = vec![vec!["monomial".to_string(), "coefficient".to_string()]];
        csv.extend(p.iter().map(|(k, c)| vec![key_text::<B>(*k), c.to_string()]));
        Rendered { json: json!({ "value": p, "text": p.to_string() }), latex: p.to_latex(), csv }
    }

    pub fn grid(g: &GridFunction) -> Self {
        let mut csv = vec![vec!["l".to_string(), "value".to_string()]];
        csv.extend(g.values.iter().enumerate().map(|(l, c)| vec![l.to_string(), c.to_string()]));
        let rows: Vec<String> = g
            .values
            .iter()
            .enumerate()
            .map(|(l, c)| {
                let at = if l == 0 { "1".to_string() } else { format!("q^{{-{}}}", 2 * l) };
                format!("Q_{{{}}}^{{({})}}({at}) &= {} \\\\", g.k, g.n, scalar_latex(c))
            })
            .collect();
        let latex = format!("\\begin{{aligned}}\n{}\n\\end{{aligned}}", rows.join("\n"));
        let text: Vec<String> = g.values.iter().map(|c| c.to_string()).collect();
        Rendered { json: json!({ "value": g, "text": text }), latex, csv }
    }

    pub fn cg_table(t: &CgTable) -> Self {
        let mut header = vec!["k".to_string()];
        header.extend(t.columns.iter().cloned());
        let mut csv = vec![header];
        for (k, row) in t.rows.iter().enumerate() {
            let mut line = vec![k.to_string()];
            line.extend(row.iter().map(|c| c.to_string()));
            csv.push(line);
        }
        let cols = "c".repeat(t.columns.len());
        let head: Vec<String> = t.columns.iter().map(|c| format!("${}$", c.replace('*', ""))).collect();
        let mut latex = format!("\\begin{{tabular}}{{r|{cols}}}\n$k$ & {} \\\\\n\\hline\n", head.join(" & "));
        for (k, row) in t.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|c| format!("${}$", scalar_latex(c))).collect();
            latex.push_str(&format!("{k} & {} \\\\\n", cells.join(" & ")));
        }
        latex.push_str("\\end{tabular}");
        Rendered { json: serde_json::to_value(t).expect("tables serialize"), latex, csv }
    }

    /// Adds a top-level field to the JSON form.
    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        if let Value::Object(m) = &mut self.json {
            m.insert(key.to_string(), value.into());
        } else {
            let mut m = Map::new();
            m.insert("value".into(), std::mem::take(&mut self.json));
            m.insert(key.to_string(), value.into());
            self.json = Value::Object(m);
        }
        self
    }
}

/// Quotes a CSV field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a"), "a");
        assert_eq!(csv_field("{\"n\":1,\"k\":2}"), "\"{\"\"n\"\":1,\"\"k\"\":2}\"");
    }
}
