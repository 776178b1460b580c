use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Plain,
    Tsv,
}

pub struct CheckLine {
    pub suite: String,
    pub instance: String,
    pub pass: bool,
    pub witness: String,
}

/// One line per check plus a `TOTAL <pass>/<all>` summary; process exit
/// status is zero exactly when nothing failed.
#[derive(Default)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn push(&mut self, suite: &str, instance: String, pass: bool, witness: String) {
        self.lines.push(CheckLine {
            suite: suite.to_string(),
            instance,
            pass,
            witness,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn passed(&self) -> usize {
        self.lines.iter().filter(|l| l.pass).count()
    }

    pub fn total(&self) -> usize {
        self.lines.len()
    }

    pub fn is_success(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let status = if line.pass { "PASS" } else { "FAIL" };
            match format {
                Format::Tsv => {
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\n",
                        line.suite, line.instance, status, line.witness
                    ));
                }
                Format::Plain => {
                    out.push_str(&format!(
                        "{} {} {} {}\n",
                        line.suite, line.instance, status, line.witness
                    ));
                }
            }
        }
        out.push_str(&format!("TOTAL {}/{}\n", self.passed(), self.total()));
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Format::Plain))
    }
}
