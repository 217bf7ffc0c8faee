//! Embedded value tables. Each table ships as a small text file:
//!
//! ```text
//! # table: sdf-5.1
//! # function: Sdf
//! # source: double factorial function example table
//! # start-index: 1
//! # layout: dense
//! 1,1
//! 2,2
//! ```
//!
//! Rows are `argument,expected`; `?` marks an unknown expected value.
//! Dense tables list consecutive arguments from the start index, so a
//! printed list is checked position by position.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::function::FunctionId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expected {
    Value(u64),
    Unknown,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Value(v) => write!(f, "{v}"),
            Expected::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Arguments run start, start + 1, ... without gaps.
    Dense,
    /// Arguments are listed explicitly and strictly increase.
    Sparse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TableEntry {
    pub argument: u64,
    pub expected: Expected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublishedTable {
    pub id: String,
    pub function: FunctionId,
    pub source: String,
    pub start_index: u64,
    pub layout: Layout,
    pub entries: Vec<TableEntry>,
}

const EMBEDDED: &[&str] = &[
    include_str!("../../data/s-1.csv"),
    include_str!("../../data/sdf-5.1.csv"),
    include_str!("../../data/sk-5.2.csv"),
    include_str!("../../data/sw-5.3.csv"),
    include_str!("../../data/s2-5.4.csv"),
    include_str!("../../data/z-5.5.csv"),
    include_str!("../../data/sntp-5.6.csv"),
    include_str!("../../data/isp-6.1a.csv"),
    include_str!("../../data/ssp-6.1b.csv"),
    include_str!("../../data/iss-6.1c.csv"),
    include_str!("../../data/sss-6.1c.csv"),
    include_str!("../../data/sqcomp-6.3a.csv"),
    include_str!("../../data/cubcomp-6.3b.csv"),
    include_str!("../../data/primecomp-6.3d.csv"),
];

/// All embedded tables, parsed once.
pub fn tables() -> &'static [PublishedTable] {
    static TABLES: OnceLock<Vec<PublishedTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        EMBEDDED
            .iter()
            .map(|text| PublishedTable::parse(text).expect("embedded table data is well formed"))
            .collect()
    })
}

pub fn table(id: &str) -> Result<&'static PublishedTable> {
    tables()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTable(id.to_string()))
}

pub fn table_ids() -> impl Iterator<Item = &'static str> {
    tables().iter().map(|t| t.id.as_str())
}

impl PublishedTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut id = None;
        let mut function = None;
        let mut source = None;
        let mut start_index = None;
        let mut layout = None;
        let mut entries = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::TableFormat { line: line_no, msg };
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let Some((key, value)) = comment.split_once(':') else {
                    continue;
                };
                let value = value.trim();
                match key.trim() {
                    "table" => id = Some(value.to_string()),
                    "function" => function = Some(value.parse::<FunctionId>()?),
                    "source" => source = Some(value.to_string()),
                    "start-index" => {
                        start_index = Some(
                            value
                                .parse::<u64>()
                                .map_err(|e| err(format!("start-index: {e}")))?,
                        )
                    }
                    "layout" => {
                        layout = Some(match value {
                            "dense" => Layout::Dense,
                            "sparse" => Layout::Sparse,
                            other => return Err(err(format!("unknown layout `{other}`"))),
                        })
                    }
                    _ => {}
                }
                continue;
            }
            let (arg, expected) = line
                .split_once(',')
                .ok_or_else(|| err("expected `argument,expected`".into()))?;
            let argument = arg
                .trim()
                .parse::<u64>()
                .map_err(|e| err(format!("argument: {e}")))?;
            let expected = match expected.trim() {
                "?" => Expected::Unknown,
                v => Expected::Value(v.parse().map_err(|e| err(format!("expected: {e}")))?),
            };
            entries.push(TableEntry { argument, expected });
        }

        let missing = |what: &str| Error::TableFormat {
            line: 0,
            msg: format!("missing `{what}` header"),
        };
        let table = PublishedTable {
            id: id.ok_or_else(|| missing("table"))?,
            function: function.ok_or_else(|| missing("function"))?,
            source: source.unwrap_or_default(),
            start_index: start_index.ok_or_else(|| missing("start-index"))?,
            layout: layout.ok_or_else(|| missing("layout"))?,
            entries,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::TableFormat { line: 0, msg });
        let Some(first) = self.entries.first() else {
            return fail(format!("table {} has no entries", self.id));
        };
        if first.argument != self.start_index {
            return fail(format!(
                "table {} starts at {} but declares start-index {}",
                self.id, first.argument, self.start_index
            ));
        }
        for w in self.entries.windows(2) {
            let ok = match self.layout {
                Layout::Dense => w[1].argument == w[0].argument + 1,
                Layout::Sparse => w[1].argument > w[0].argument,
            };
            if !ok {
                return fail(format!(
                    "table {} breaks its {:?} layout at argument {}",
                    self.id, self.layout, w[1].argument
                ));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        let ids: Vec<_> = table_ids().collect();
        assert_eq!(ids.len(), 14);
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate table id");

        let sdf = table("sdf-5.1").unwrap();
        assert_eq!(sdf.function, FunctionId::DoubleFactorial);
        assert_eq!(sdf.entries.len(), 16);
        assert_eq!(table("s2-5.4").unwrap().function, FunctionId::Ceil { k: 2 });
        assert_eq!(table("isp-6.1a").unwrap().start_index, 2);
        assert_eq!(table("ssp-6.1b").unwrap().start_index, 0);
        assert_eq!(table("sqcomp-6.3a").unwrap().start_index, 1);
        let sntp = table("sntp-5.6").unwrap();
        assert_eq!(sntp.layout, Layout::Sparse);
        assert!(sntp.entries.contains(&TableEntry {
            argument: 9,
            expected: Expected::Unknown
        }));
        assert!(matches!(table("nope"), Err(Error::UnknownTable(_))));
    }

    #[test]
    fn parse_rejects_malformed_tables() {
        let header = "# table: t\n# function: S\n# start-index: 1\n# layout: dense\n";
        assert!(PublishedTable::parse(&format!("{header}1,1\n2,2\n")).is_ok());
        assert!(PublishedTable::parse(&format!("{header}1,1\n3,3\n")).is_err());
        assert!(PublishedTable::parse(&format!("{header}2,1\n")).is_err());
        assert!(PublishedTable::parse(&format!("{header}1;1\n")).is_err());
        assert!(PublishedTable::parse(&format!("{header}1,x\n")).is_err());
        assert!(PublishedTable::parse(header).is_err());
        assert!(PublishedTable::parse("1,1\n").is_err());
        let unknown_fn = header.replace("function: S", "function: Q");
        assert!(matches!(
            PublishedTable::parse(&format!("{unknown_fn}1,1\n")),
            Err(Error::UnknownFunction(_))
        ));
    }
}
