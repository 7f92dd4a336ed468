import os
import time
from dataclasses import dataclass

import psutil
from devtools import sformat, sprint


@dataclass
class profile:
    """
    A context manager for timing a long step and, optionally, the resident memory it added.
    For example:

        with profile(description='ingest enwiki sample', profile_memory=True):
            build_graph_store(stream)
    """

    description: str = ''
    profile_memory: bool = True

    def __post_init__(self):
        self.start = None
        self.mem_usage_start = None
        self.elapsed = None
        self.mem_used = None

    def __enter__(self):
        sprint(f'\n  Start: {self.description}', sformat.green, sformat.bold)
        if self.profile_memory:
            self.mem_usage_start = psutil.Process(os.getpid()).memory_info().rss
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self.start
        sprint(f'  Finish: {self.description} in {self.elapsed:0.2f}s\n', sformat.green, sformat.bold)
        if self.profile_memory:
            self.mem_used = psutil.Process(os.getpid()).memory_info().rss - self.mem_usage_start
            sprint(f'Memory used: {round(self.mem_used / 1024 / 1024, 2)}MB', sformat.green, sformat.bold)
