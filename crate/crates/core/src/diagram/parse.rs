use std::collections::HashMap;

use super::{slot, Crossing, Diagram};
use crate::error::{Error, Result};

/// Parses the line format:
///
/// ```text
/// crossing <id> <e0> <e1> <e2> <e3> over=<even|odd>
/// loop <id>
/// seed <crossing>.<slot>
/// outer <crossing>.<corner>
/// ```
///
/// Every edge label must occur exactly twice. `#` starts a comment.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut crossings = Vec::new();
    let mut loops = Vec::new();
    // label -> slots carrying it, with the line of first use
    let mut labels: HashMap<String, (usize, Vec<usize>)> = HashMap::new();
    let mut label_order: Vec<String> = Vec::new();
    let mut seeds = Vec::new();
    let mut outer = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |msg: String| Error::Syntax { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let new_id = |id: &str, ids: &mut HashMap<String, usize>| {
            if id.contains('.') {
                return Err(syntax(format!("id {id:?} may not contain '.'")));
            }
            if ids.insert(id.to_string(), line_no).is_some() {
                return Err(syntax(format!("duplicate id {id:?}")));
            }
            Ok(())
        };
        match fields[0] {
            "crossing" => {
                if fields.len() != 7 {
                    return Err(syntax(format!(
                        "crossing needs an id, four edge labels and an over flag, got {line:?}"
                    )));
                }
                new_id(fields[1], &mut ids)?;
                let over_even = match fields[6] {
                    "over=even" => true,
                    "over=odd" => false,
                    flag => return Err(Error::BadOverFlag { line: line_no, flag: flag.to_string() }),
                };
                let c = crossings.len();
                for s in 0..4 {
                    let label = fields[2 + s];
                    let entry = labels.entry(label.to_string()).or_insert_with(|| {
                        label_order.push(label.to_string());
                        (line_no, Vec::new())
                    });
                    if entry.1.len() == 2 {
                        return Err(Error::DuplicateSlot {
                            line: line_no,
                            detail: format!("edge label {label} used more than twice"),
                        });
                    }
                    entry.1.push(slot(c, s));
                }
                crossings.push(Crossing { id: fields[1].to_string(), over_even });
            }
            "loop" => {
                if fields.len() != 2 {
                    return Err(syntax("loop takes exactly one id".into()));
                }
                new_id(fields[1], &mut ids)?;
                loops.push(fields[1].to_string());
            }
            "seed" | "outer" => {
                if fields.len() != 2 {
                    return Err(syntax(format!("{} takes one <crossing>.<index> reference", fields[0])));
                }
                let target = if fields[0] == "seed" { &mut seeds } else { &mut outer };
                target.push((line_no, fields[1].to_string()));
            }
            other => return Err(syntax(format!("unknown directive {other:?}"))),
        }
    }

    let mut mate = vec![usize::MAX; 4 * crossings.len()];
    for label in &label_order {
        let (line, slots) = &labels[label];
        if slots.len() != 2 {
            return Err(Error::UnmatchedEdge { line: *line, label: label.clone() });
        }
        mate[slots[0]] = slots[1];
        mate[slots[1]] = slots[0];
    }
    let d = Diagram::new(crossings, mate, loops)?;
    let resolve = |refs: Vec<(usize, String)>| -> Result<Vec<usize>> {
        refs.into_iter()
            .map(|(line, r)| d.parse_slot(&r).map_err(|e| Error::Syntax { line, msg: e.to_string() }))
            .collect()
    };
    let seeds = resolve(seeds)?;
    let outer = resolve(outer)?;
    d.with_seeds(seeds)?.with_outer(outer)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "\
crossing 1 1 4 2 5 over=odd
crossing 2 3 6 4 1 over=odd
crossing 3 5 2 6 3 over=odd
seed 1.2
";

    #[test]
    fn parses_trefoil() {
        let d = parse_diagram(TREFOIL).unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.edges().len(), 6);
        assert_eq!(d.num_link_components(), 1);
        assert_eq!(d.num_pieces(), 1);
        assert!(d.orientation().is_ok());
        assert_eq!(parse_diagram(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn parses_loop() {
        let d = parse_diagram("loop 1\n").unwrap();
        assert_eq!((d.num_crossings(), d.num_loops()), (0, 1));
        assert_eq!(d.num_link_components(), 1);
        assert_eq!(d.to_string(), "loop 1\n");
    }

    #[test]
    fn reports_errors_with_lines() {
        let dup = "crossing a 1 1 2 2 over=even\ncrossing b 1 3 3 4 over=even\n";
        assert!(matches!(parse_diagram(dup), Err(Error::DuplicateSlot { line: 2, .. })));
        let unmatched = "crossing a 1 1 2 3 over=even\n";
        assert!(matches!(parse_diagram(unmatched), Err(Error::UnmatchedEdge { line: 1, .. })));
        let flag = "# kink\ncrossing a 1 1 2 2 over=up\n";
        assert!(matches!(parse_diagram(flag), Err(Error::BadOverFlag { line: 2, .. })));
        assert!(matches!(parse_diagram("crossing a 1 1 2\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_diagram("loop a\nloop a\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_diagram("loop a\nseed b.0\n"), Err(Error::Syntax { line: 2, .. })));
    }
}
