import json
from typing import Any, Union

from verbs.enum.output_format import OutputFormat


def emit(
    output_format: OutputFormat,
    text: Union[str, None] = None,
    payload: Any = None,
) -> None:
    """Macro to print a command result in the requested format"""
    match output_format:
        case OutputFormat.TEXT:
            line: str = "" if text is None else text
        case OutputFormat.JSON:
            line: str = json.dumps(payload, sort_keys=True, ensure_ascii=False)
        case _:
            line: str = ""

    print(line, flush=True)
