import logging
import sys
from typing import Optional, IO


class OvertopLogger(logging.Logger):
    def __init__(self, name: str, level: int,
                 filename: Optional[str] = None, filemode: str = "a",
                 stream: Optional[IO[str]] = None,
                 format: Optional[str] = None, dateformat: Optional[str] = None,
                 style: str = "%"):
        super().__init__(name, level)
        if filename is not None:
            handler = logging.FileHandler(filename, filemode)
        else:
            handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
        self._formatter = logging.Formatter(format, dateformat, style)
        handler.setFormatter(self._formatter)
        super().addHandler(handler)

    def add_filehandler(self, log_path: str) -> None:
        filehandler = logging.FileHandler(log_path)
        filehandler.setFormatter(self._formatter)
        self.addHandler(filehandler)


logger = OvertopLogger(name="overtop", level=logging.INFO,
                       format="%(asctime)-15s %(levelname)s %(message)s")
