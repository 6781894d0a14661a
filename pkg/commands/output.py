import csv
import io
import os
import os.path as osp

from utils.errors import ParameterError

FORMATS = ("table", "json", "csv")
EXTENSIONS = {"table": "txt", "json": "json", "csv": "csv"}


def flatten(value, prefix=""):
    """(key, text) pairs of a nested dump, keys joined with '.' and list indices in brackets."""
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            out.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [(prefix, ", ".join("" if v is None else str(v) for v in value))]
        out = []
        for i, v in enumerate(value):
            out.extend(flatten(v, f"{prefix}[{i}]"))
        return out
    return [(prefix, "" if value is None else str(value))]


def emit(record, fmt):
    if fmt not in FORMATS:
        raise ParameterError(f"unknown output format {fmt!r}; choose from {FORMATS}")
    if fmt == "json":
        return record.model_dump_json(indent=2)
    rows = flatten(record.model_dump())
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def save(record, fmt, output_dir):
    """Write the record next to the log; returns the path, or None without an output directory."""
    if not output_dir:
        return None
    os.makedirs(output_dir, exist_ok=True)
    fpath = osp.join(output_dir, f"{record.command}.{EXTENSIONS[fmt]}")
    with open(fpath, "w") as f:
        f.write(emit(record, fmt) + "\n")
    return fpath
