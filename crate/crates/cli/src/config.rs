use std::collections::HashMap;
use std::path::Path;

/// `key = value` defaults; `#` starts a comment. A key may be scoped to a
/// subcommand as `rv.pmax = 50`, which wins over a bare `pmax`.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    values: HashMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", lineno + 1))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn get(&self, scope: &str, key: &str) -> Option<&str> {
        self.values
            .get(&format!("{scope}.{key}"))
            .or_else(|| self.values.get(key))
            .map(String::as_str)
    }

    pub fn parse_value<T: std::str::FromStr>(
        &self,
        scope: &str,
        key: &str,
    ) -> Result<Option<T>, String> {
        match self.get(scope, key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| format!("config: invalid value {v:?} for {key}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_keys_win() {
        let c = Config::parse("pmax = 30\n# comment\nrv.pmax=11 # trailing\n\n").unwrap();
        assert_eq!(c.get("rv", "pmax"), Some("11"));
        assert_eq!(c.get("sun-p4", "pmax"), Some("30"));
        assert_eq!(c.parse_value::<u64>("lemma2p", "pmax").unwrap(), Some(30));
        assert!(c.parse_value::<u64>("x", "missing").unwrap().is_none());
        assert!(Config::parse("novalue").is_err());
        assert!(Config::parse("pmax=abc")
            .unwrap()
            .parse_value::<u64>("rv", "pmax")
            .is_err());
    }
}
