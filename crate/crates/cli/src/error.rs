use jue_core::Error;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl CliError {
    /// 2 for bad input, 3 for guards, 4 for poles, 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::Invalid(_) | Error::WeightMismatch(..) | Error::VarSetMismatch(..) => 2,
                Error::GuardExceeded(_) => 3,
                Error::Pole(_) | Error::DivisionByZero => 4,
                _ => 1,
            },
        }
    }
}
