from typing import Dict, Iterable, Optional, Tuple

from marshmallow import Schema, ValidationError

from tangentcone.utils.exceptions import ParseError


class FileRecords:
    """Keyword lines of a text file: scalar keywords once, repeated keywords as lists.

    ``lines`` maps each field (and each list position) back to its 1-based
    line number so validation errors can point at the offending line.
    """

    def __init__(self):
        self.data: Dict[str, object] = {}
        self.lines: Dict[str, object] = {}


def read_records(text: str, source: str, single: Iterable[str], repeated: Iterable[str]) -> FileRecords:
    single, repeated = set(single), set(repeated)
    records = FileRecords()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(' ')
        rest = rest.strip()
        if keyword in single:
            if keyword in records.data:
                raise ParseError(f"duplicate '{keyword}' line", line=lineno, source=source)
            records.data[keyword] = rest
            records.lines[keyword] = lineno
        elif keyword in repeated:
            records.data.setdefault(keyword, []).append(rest)
            records.lines.setdefault(keyword, []).append(lineno)
        else:
            raise ParseError(f"unknown keyword '{keyword}'", line=lineno, source=source)
    return records


def _first_error(messages, path: Tuple = ()) -> Tuple[Tuple, str]:
    if isinstance(messages, dict):
        key = sorted(messages, key=str)[0]
        return _first_error(messages[key], path + (key,))
    if isinstance(messages, list):
        return path, str(messages[0])
    return path, str(messages)


def load_records(schema: Schema, records: FileRecords, source: str):
    """Validate records with a schema, turning the first error into a located ParseError."""
    try:
        return schema.load(records.data)
    except ValidationError as e:
        path, message = _first_error(e.messages)
        line: Optional[int] = None
        if path:
            entry = records.lines.get(path[0])
            if isinstance(entry, list):
                if len(path) > 1 and isinstance(path[1], int) and path[1] < len(entry):
                    line = entry[path[1]]
                else:
                    line = entry[0]
            else:
                line = entry
        field = path[0] if path else 'file'
        raise ParseError(f"{field}: {message}", line=line, source=source)
