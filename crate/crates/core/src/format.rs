//! PGSolver text format.
//!
//! Input grammar (whitespace-tolerant, `;`-terminated statements, the final
//! semicolon may be omitted):
//!
//! ```text
//! parity <max-id>;                              (optional header)
//! <id> <priority> <owner> <succ,succ,...> ["name"];
//! ```
//!
//! Owner `0` is Even, `1` is Odd. Position ids may be sparse; they are
//! compacted to a dense `[0..n)` index space in order of declaration, and a
//! compacted position without an explicit name keeps its original id as its
//! name. Output is canonical: header with the maximal id, one line per
//! position in ascending index order, LF line endings.

use std::collections::HashMap;

use crate::game::{Owner, ParityGame, Position};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {0}: malformed statement")]
    MalformedLine(usize),
    #[error("successor {0} is not a declared position")]
    DanglingSuccessor(usize),
    #[error("position {0} has no successor")]
    NoSuccessor(usize),
    #[error("position {0} is declared twice")]
    DuplicateId(usize),
}

/// One raw `id prio owner succs [name]` statement.
struct RawPosition {
    id: usize,
    priority: u32,
    owner: Owner,
    successors: Vec<usize>,
    name: Option<String>,
}

/// Splits the input into `;`-terminated statements, tracking the line each
/// statement starts on. Quotes protect `;` inside names.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start_line = 1;
    let mut line = 1;
    let mut in_quotes = false;
    for ch in text.chars() {
        match ch {
            '"' => {
                in_quotes = !in_quotes;
                current.push(ch);
            }
            ';' if !in_quotes => {
                out.push((start_line, std::mem::take(&mut current)));
                start_line = line;
            }
            '\n' => {
                line += 1;
                if current.trim().is_empty() {
                    start_line = line;
                }
                current.push(ch);
            }
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        out.push((start_line, current));
    }
    out.retain(|(_, s)| !s.trim().is_empty());
    out
}

fn parse_statement(line: usize, stmt: &str) -> Result<RawPosition, ParseError> {
    let malformed = || ParseError::MalformedLine(line);

    // Split off an optional quoted name.
    let (head, name) = match stmt.find('"') {
        Some(open) => {
            let rest = &stmt[open + 1..];
            let close = rest.find('"').ok_or_else(malformed)?;
            if !rest[close + 1..].trim().is_empty() {
                return Err(malformed());
            }
            (&stmt[..open], Some(rest[..close].to_string()))
        }
        None => (stmt, None),
    };

    let mut tokens = head.split_whitespace();
    let id: usize = tokens.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    let priority: u32 = tokens.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
    let owner = match tokens.next().ok_or_else(malformed)? {
        "0" => Owner::Even,
        "1" => Owner::Odd,
        _ => return Err(malformed()),
    };

    // The remaining tokens form the comma-separated successor list; stray
    // whitespace around commas is tolerated.
    let succ_text: String = tokens.collect::<Vec<_>>().concat();
    if succ_text.is_empty() {
        return Err(ParseError::NoSuccessor(id));
    }
    let successors = succ_text
        .split(',')
        .map(|t| t.parse::<usize>().map_err(|_| malformed()))
        .collect::<Result<Vec<usize>, _>>()?;

    Ok(RawPosition {
        id,
        priority,
        owner,
        successors,
        name,
    })
}

/// Parses PGSolver text into a validated arena.
pub fn parse_pgsolver(text: &str) -> Result<ParityGame, ParseError> {
    let mut stmts = statements(text);
    if let Some((line, first)) = stmts.first() {
        let mut tokens = first.split_whitespace();
        if tokens.next() == Some("parity") {
            // Header value is tolerated but not enforced.
            match (tokens.next(), tokens.next()) {
                (Some(v), None) if v.parse::<usize>().is_ok() => {
                    stmts.remove(0);
                }
                _ => return Err(ParseError::MalformedLine(*line)),
            }
        }
    }
    if stmts.is_empty() {
        return Err(ParseError::MalformedLine(1));
    }

    let raw: Vec<RawPosition> = stmts
        .iter()
        .map(|(line, s)| parse_statement(*line, s))
        .collect::<Result<_, _>>()?;

    // Compact sparse ids in declaration order.
    let mut index_of: HashMap<usize, usize> = HashMap::with_capacity(raw.len());
    for (idx, r) in raw.iter().enumerate() {
        if index_of.insert(r.id, idx).is_some() {
            return Err(ParseError::DuplicateId(r.id));
        }
    }

    let mut positions = Vec::with_capacity(raw.len());
    for (idx, r) in raw.iter().enumerate() {
        if r.successors.is_empty() {
            return Err(ParseError::NoSuccessor(r.id));
        }
        let successors = r
            .successors
            .iter()
            .map(|s| index_of.get(s).copied().ok_or(ParseError::DanglingSuccessor(*s)))
            .collect::<Result<Vec<usize>, _>>()?;
        let name = match &r.name {
            Some(n) => Some(n.clone()),
            // A compacted id would be lost otherwise; keep it as the name.
            None if r.id != idx => Some(r.id.to_string()),
            None => None,
        };
        positions.push(Position {
            owner: r.owner,
            priority: r.priority,
            successors,
            name,
        });
    }

    let game = ParityGame::from_positions(positions).expect("parser checks all invariants");
    Ok(game)
}

/// Writes the canonical PGSolver form: `parse(write(g))` reproduces `g`
/// exactly, including owners, priorities, successor order, and names.
pub fn write_pgsolver(game: &ParityGame) -> String {
    let mut out = String::new();
    out.push_str(&format!("parity {};\n", game.len().saturating_sub(1)));
    for (i, pos) in game.positions().iter().enumerate() {
        let succs = pos
            .successors
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let owner = match pos.owner {
            Owner::Even => 0,
            Owner::Odd => 1,
        };
        match &pos.name {
            Some(name) => out.push_str(&format!("{i} {} {owner} {succs} \"{name}\";\n", pos.priority)),
            None => out.push_str(&format!("{i} {} {owner} {succs};\n", pos.priority)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_two_position_example() {
        let g = parse_pgsolver("parity 1; 0 2 0 1; 1 3 1 0 \"v\";").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.owner(0), Owner::Even);
        assert_eq!(g.priority(0), 2);
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.name(0), None);
        assert_eq!(g.owner(1), Owner::Odd);
        assert_eq!(g.priority(1), 3);
        assert_eq!(g.successors(1), &[0]);
        assert_eq!(g.name(1), Some("v"));
        assert_eq!(g.max_priority(), 3);
    }

    #[test]
    fn parses_the_smallest_game() {
        let g = parse_pgsolver("0 0 0 0;").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.owner(0), Owner::Even);
        assert_eq!(g.priority(0), 0);
        assert_eq!(g.successors(0), &[0]);
    }

    #[test]
    fn dangling_successor_names_the_token() {
        assert_eq!(parse_pgsolver("0 1 0 1;"), Err(ParseError::DanglingSuccessor(1)));
    }

    #[test]
    fn duplicate_id_is_reported() {
        assert_eq!(
            parse_pgsolver("0 0 0 0; 0 1 1 0;"),
            Err(ParseError::DuplicateId(0))
        );
    }

    #[test]
    fn missing_final_semicolon_is_tolerated() {
        let g = parse_pgsolver("parity 1;\n0 2 0 1;\n1 3 1 0").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.successors(1), &[0]);
    }

    #[test]
    fn sparse_ids_are_compacted_and_keep_the_original_as_name() {
        let g = parse_pgsolver("4 0 0 9; 9 1 1 4,9;").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.successors(1), &[0, 1]);
        assert_eq!(g.name(0), Some("4"));
        assert_eq!(g.name(1), Some("9"));
    }

    #[test]
    fn dense_unnamed_positions_stay_unnamed() {
        let g = parse_pgsolver("0 0 0 1; 1 0 1 0;").unwrap();
        assert_eq!(g.name(0), None);
        assert_eq!(g.name(1), None);
    }

    #[test]
    fn malformed_lines_carry_the_line_number() {
        assert_eq!(
            parse_pgsolver("0 0 0 0;\nnot a line;"),
            Err(ParseError::MalformedLine(2))
        );
        assert_eq!(parse_pgsolver("0 0 7 0;"), Err(ParseError::MalformedLine(1)));
        assert_eq!(parse_pgsolver(""), Err(ParseError::MalformedLine(1)));
    }

    #[test]
    fn empty_successor_list_is_no_successor() {
        assert_eq!(parse_pgsolver("0 1 0 ;"), Err(ParseError::NoSuccessor(0)));
    }

    #[test]
    fn canonical_write_of_the_self_loop() {
        let g = parse_pgsolver("0 0 0 0;").unwrap();
        assert_eq!(write_pgsolver(&g), "parity 0;\n0 0 0 0;\n");
    }

    #[test]
    fn round_trip_reproduces_the_game_exactly() {
        for text in [
            "parity 1; 0 2 0 1; 1 3 1 0 \"v\";",
            "4 0 0 9; 9 1 1 4,9;",
            "0 5 1 0 \"self loop\";",
            // Duplicate successor entries are part of the stored order.
            "0 1 1 1,1,0; 1 0 0 0;",
        ] {
            let g = parse_pgsolver(text).unwrap();
            let again = parse_pgsolver(&write_pgsolver(&g)).unwrap();
            assert_eq!(g, again);
        }
    }

    #[test]
    fn whitespace_is_arbitrary() {
        let g = parse_pgsolver("  parity   3 ;\n\n 0   2 0   1 , 0 ;   1 3 1 0\t\"v\" ").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.successors(0), &[1, 0]);
        assert_eq!(g.name(1), Some("v"));
    }
}
