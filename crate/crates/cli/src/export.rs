use std::fmt::Write;

use serde_json::json;

use toeplitz_core::{Graph, ToeplitzParams};

use crate::{ExportFormat, Output};

pub fn export(p: &ToeplitzParams, format: ExportFormat) -> Output {
    let g = Graph::toeplitz(p);
    let edges = g.edges();
    let mut text = String::new();
    match format {
        ExportFormat::Dot => {
            writeln!(text, "graph \"{p}\" {{").unwrap();
            for v in 1..=g.order() {
                writeln!(text, "  {v};").unwrap();
            }
            for (a, b) in &edges {
                writeln!(text, "  {a} -- {b};").unwrap();
            }
            text.push_str("}\n");
        }
        ExportFormat::Adjlist => {
            for v in 1..=g.order() {
                let nb: Vec<String> = g
                    .neighbors(v)
                    .expect("vertex in range")
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                if nb.is_empty() {
                    writeln!(text, "{v}:").unwrap();
                } else {
                    writeln!(text, "{v}: {}", nb.join(" ")).unwrap();
                }
            }
        }
        ExportFormat::Json => {}
    }
    let result = json!({"order": g.order(), "edges": edges});
    if matches!(format, ExportFormat::Json) {
        // Always an envelope, with or without --json.
        let env = crate::envelope(
            "export",
            json!({"n": p.n(), "offsets": p.offsets()}),
            result.clone(),
        );
        text = format!("{env}\n");
    }
    Output {
        result,
        human: text,
        code: 0,
    }
}
