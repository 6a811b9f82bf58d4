use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use mtfp_core::{
    validate_instance, DepartmentAssignment, ProblemInstance, RequirementMatrix,
    SociometricMatrix,
};

use crate::InstanceIoError;

const MAGIC_COMMENT: &str = "# MTFP problem instance";

/// One integer token with the line it came from, for diagnostics.
#[derive(Debug, Clone, Copy)]
struct Cell {
    value: i64,
    line: usize,
}

#[derive(Debug, Default)]
struct RawDocument {
    name: Option<String>,
    n_individuals: Option<usize>,
    n_departments: Option<usize>,
    n_groups: Option<usize>,
    departments: Option<Vec<Cell>>,
    requirements: Option<Vec<Cell>>,
    sociometric: Option<Vec<Cell>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> InstanceIoError {
    InstanceIoError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an instance document from text and validates it.
pub fn parse_instance(text: &str) -> Result<ProblemInstance, InstanceIoError> {
    let raw = scan(text)?;

    let name = raw.name.ok_or_else(|| parse_err(0, "missing `name:` field"))?;
    let n_i = raw
        .n_individuals
        .ok_or_else(|| parse_err(0, "missing `individuals:` field"))?;
    let n_j = raw
        .n_departments
        .ok_or_else(|| parse_err(0, "missing `departments:` field"))?;
    let n_k = raw
        .n_groups
        .ok_or_else(|| parse_err(0, "missing `groups:` field"))?;
    if n_i == 0 || n_j == 0 || n_k == 0 {
        return Err(parse_err(0, "individuals, departments and groups must all be at least 1"));
    }

    let dept_cells = raw
        .departments
        .ok_or_else(|| parse_err(0, "missing [departments] section"))?;
    let req_cells = raw
        .requirements
        .ok_or_else(|| parse_err(0, "missing [requirements] section"))?;
    let socio_cells = raw
        .sociometric
        .ok_or_else(|| parse_err(0, "missing [sociometric] section"))?;

    check_cell_count("[departments]", &dept_cells, n_i)?;
    check_cell_count("[requirements]", &req_cells, n_j * n_k)?;
    check_cell_count("[sociometric]", &socio_cells, n_i * n_i)?;

    // Department indices are 1-based in the document.
    let mut dept_of = Vec::with_capacity(n_i);
    for cell in &dept_cells {
        if cell.value < 1 {
            return Err(parse_err(
                cell.line,
                format!("department index {} out of range (indices are 1-based)", cell.value),
            ));
        }
        dept_of.push(cell.value as usize - 1);
    }

    let mut req_rows = Vec::with_capacity(n_j);
    for j in 0..n_j {
        let mut row = Vec::with_capacity(n_k);
        for k in 0..n_k {
            let cell = req_cells[j * n_k + k];
            let value = u32::try_from(cell.value).map_err(|_| {
                parse_err(
                    cell.line,
                    format!("requirement cell ({}, {}) is {}, must be a non-negative integer", j + 1, k + 1, cell.value),
                )
            })?;
            row.push(value);
        }
        req_rows.push(row);
    }

    let mut socio_rows = Vec::with_capacity(n_i);
    for i in 0..n_i {
        let mut row = Vec::with_capacity(n_i);
        for j in 0..n_i {
            let cell = socio_cells[i * n_i + j];
            let value = i8::try_from(cell.value).map_err(|_| {
                parse_err(
                    cell.line,
                    format!("sociometric cell ({}, {}) is {}, out of representable range", i + 1, j + 1, cell.value),
                )
            })?;
            row.push(value);
        }
        socio_rows.push(row);
    }

    let socio = SociometricMatrix::from_rows(socio_rows)
        .map_err(|e| parse_err(0, e.to_string()))?;
    let req = RequirementMatrix::from_rows(req_rows).map_err(|e| parse_err(0, e.to_string()))?;
    let instance = ProblemInstance::new(name, socio, req, DepartmentAssignment::new(dept_of));

    let violations = validate_instance(&instance);
    if violations.is_empty() {
        Ok(instance)
    } else {
        Err(InstanceIoError::Validation(violations))
    }
}

fn check_cell_count(section: &str, cells: &[Cell], expected: usize) -> Result<(), InstanceIoError> {
    if cells.len() != expected {
        let line = cells.last().map_or(0, |c| c.line);
        return Err(parse_err(
            line,
            format!("{section} has {} cells, expected {expected}", cells.len()),
        ));
    }
    Ok(())
}

/// Tokenizes the document into header fields and section cell lists.
fn scan(text: &str) -> Result<RawDocument, InstanceIoError> {
    let mut raw = RawDocument::default();
    let mut current_section: Option<(String, Vec<Cell>, usize)> = None;

    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full_line.find('#') {
            Some(pos) => &full_line[..pos],
            None => full_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }

        if let Some(section) = line.strip_prefix('[') {
            let section = section
                .strip_suffix(']')
                .ok_or_else(|| parse_err(line_no, "unterminated section header"))?
                .trim()
                .to_string();
            if let Some((name, cells, start)) = current_section.take() {
                store_section(&mut raw, &name, cells, start)?;
            }
            current_section = Some((section, Vec::new(), line_no));
            continue;
        }

        if let Some((_, cells, _)) = current_section.as_mut() {
            for token in line.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let value = token.parse::<i64>().map_err(|_| {
                    parse_err(line_no, format!("expected an integer cell, found {token:?}"))
                })?;
                cells.push(Cell { value, line: line_no });
            }
            continue;
        }

        // Header phase: `key: value` lines.
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_err(line_no, format!("expected `key: value`, found {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "name" => {
                if value.is_empty() {
                    return Err(parse_err(line_no, "name must not be empty"));
                }
                set_once(&mut raw.name, value.to_string(), "name", line_no)?;
            }
            "individuals" => {
                set_once(&mut raw.n_individuals, parse_count(value, line_no)?, "individuals", line_no)?;
            }
            "departments" => {
                set_once(&mut raw.n_departments, parse_count(value, line_no)?, "departments", line_no)?;
            }
            "groups" => {
                set_once(&mut raw.n_groups, parse_count(value, line_no)?, "groups", line_no)?;
            }
            other => {
                return Err(parse_err(line_no, format!("unknown header field {other:?}")));
            }
        }
    }

    if let Some((name, cells, start)) = current_section.take() {
        store_section(&mut raw, &name, cells, start)?;
    }
    Ok(raw)
}

fn parse_count(value: &str, line: usize) -> Result<usize, InstanceIoError> {
    value
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a count, found {value:?}")))
}

fn set_once<T>(slot: &mut Option<T>, value: T, what: &str, line: usize) -> Result<(), InstanceIoError> {
    if slot.is_some() {
        return Err(parse_err(line, format!("duplicate {what}")));
    }
    *slot = Some(value);
    Ok(())
}

fn store_section(
    raw: &mut RawDocument,
    name: &str,
    cells: Vec<Cell>,
    start_line: usize,
) -> Result<(), InstanceIoError> {
    let slot = match name {
        "departments" => &mut raw.departments,
        "requirements" => &mut raw.requirements,
        "sociometric" => &mut raw.sociometric,
        other => return Err(parse_err(start_line, format!("unknown section [{other}]"))),
    };
    if slot.is_some() {
        return Err(parse_err(start_line, format!("duplicate section [{name}]")));
    }
    *slot = Some(cells);
    Ok(())
}

/// Loads and validates an instance from a reader.
pub fn load_instance(mut source: impl Read) -> Result<ProblemInstance, InstanceIoError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_instance(&text)
}

/// Loads and validates an instance from a file path.
pub fn load_instance_from_path(path: impl AsRef<Path>) -> Result<ProblemInstance, InstanceIoError> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

/// Renders the canonical document for an instance. Output is deterministic:
/// the same instance always produces the same bytes.
pub fn save_instance_to_string(instance: &ProblemInstance) -> Result<String, InstanceIoError> {
    let name = &instance.name;
    if name.is_empty() || name.contains('\n') || name.contains('#') || name.trim() != name {
        return Err(InstanceIoError::InvalidName(name.clone()));
    }

    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC_COMMENT}");
    let _ = writeln!(out, "name: {name}");
    let _ = writeln!(out, "individuals: {}", instance.n_individuals());
    let _ = writeln!(out, "departments: {}", instance.n_departments());
    let _ = writeln!(out, "groups: {}", instance.n_groups());

    let dept_labels: Vec<String> = instance
        .depts
        .as_slice()
        .iter()
        .map(|&d| (d + 1).to_string())
        .collect();
    let _ = writeln!(out, "\n[departments]");
    write_grid(&mut out, &[dept_labels]);

    let req_rows: Vec<Vec<String>> = instance
        .req
        .rows()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let _ = writeln!(out, "\n[requirements]");
    write_grid(&mut out, &req_rows);

    let socio_rows: Vec<Vec<String>> = instance
        .socio
        .rows()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let _ = writeln!(out, "\n[sociometric]");
    write_grid(&mut out, &socio_rows);

    Ok(out)
}

/// Writes rows of cells right-aligned to the widest cell in the grid.
fn write_grid(out: &mut String, rows: &[Vec<String>]) {
    let width = rows
        .iter()
        .flatten()
        .map(|cell| cell.len())
        .max()
        .unwrap_or(1);
    for row in rows {
        let line: Vec<String> = row.iter().map(|cell| format!("{cell:>width$}")).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
}

/// Writes the canonical document to a sink.
pub fn save_instance(
    instance: &ProblemInstance,
    mut sink: impl Write,
) -> Result<(), InstanceIoError> {
    let text = save_instance_to_string(instance)?;
    sink.write_all(text.as_bytes())?;
    Ok(())
}
