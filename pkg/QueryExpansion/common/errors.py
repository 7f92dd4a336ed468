class PipelineError(Exception):
    """
    Base for every error a subcommand reports to the user rather than as a traceback.
    """


class ConfigError(PipelineError):
    pass


class OutputLocked(PipelineError):
    pass


class StoreFormatError(PipelineError):
    pass


class ParseError(PipelineError):
    """
    A malformed line in one of the text inputs: topics, qrels, runs, weighted queries or the tagger lexicon.
    """

    def __init__(self, message: str, lineno: int | None = None, filename=None):
        self.lineno = lineno
        self.filename = filename
        where = ':'.join(str(p) for p in (filename, lineno) if p is not None)
        super().__init__(f'{where}: {message}' if where else message)
