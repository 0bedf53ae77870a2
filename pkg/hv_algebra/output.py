"""Machine output on stdout, structured errors on stderr, Rich tables behind --pretty."""

import json
import sys
from typing import Any, Callable, Optional

from rich import box
from rich.console import Console
from rich.table import Table

err_console = Console(stderr=True)
out_console = Console()

TableBuilder = Callable[[Any], Optional[Table]]


def print_json(data: Any) -> None:
    print(json.dumps(data, ensure_ascii=False))


def print_error(error_type: str, message: str, detail: Any | None = None) -> None:
    """One JSON object on stderr; ``detail`` carries witnesses and offsets."""
    error: dict[str, Any] = {"type": error_type, "message": message}
    if detail is not None:
        error["detail"] = detail
    print(json.dumps({"error": error}, ensure_ascii=False), file=sys.stderr)


def emit(data: Any, pretty: bool = False, table_builder: TableBuilder | None = None) -> None:
    if pretty:
        table = table_builder(data) if table_builder else None
        if table is None:
            out_console.print_json(data=data)
        else:
            out_console.print(table)
        return
    print_json(data)


def read_text_arg(value: str) -> str:
    if value == "-":
        if sys.stdin.isatty():
            err_console.print("[dim]hv: reading JSON payload from stdin (Ctrl+D ends it)[/dim]")
        return sys.stdin.read()
    return value


def simple_table(
    rows: list[dict[str, Any]], columns: list[tuple[str, str]], title: str | None = None
) -> Table:
    table = Table(title=title, box=box.SIMPLE_HEAVY, header_style="bold")
    for header, _ in columns:
        # exact coefficients fold, never truncate
        table.add_column(header, overflow="fold")
    for row in rows:
        table.add_row(*[_cell(row.get(key)) for _, key in columns])
    return table


def element_table(data: Any) -> Table | None:
    """Terms of a serialized element, titled with its canonical text."""
    if not isinstance(data, dict) or "terms" not in data:
        return None
    rows = [{"symbol": sym, "coeff": coeff} for sym, coeff in data["terms"]]
    return simple_table(
        rows,
        [("Symbol", "symbol"), ("Coefficient", "coeff")],
        title=f"{data.get('algebra')}: {data.get('text')}",
    )


def parameters_table(data: Any) -> Table | None:
    if not isinstance(data, dict):
        return None
    rows = [{"name": key, "value": value} for key, value in data.items()]
    return simple_table(rows, [("Parameter", "name"), ("Value", "value")])


def report_table(data: Any) -> Table | None:
    if not isinstance(data, dict) or "suites" not in data:
        return None
    rows = [
        {
            "name": s["name"],
            "status": "[green]pass[/green]" if s["status"] == "pass" else "[red]fail[/red]",
            "samples": s["samples"],
            "seconds": s.get("seconds"),
            "check": (s.get("counterexample") or {}).get("check"),
        }
        for s in data["suites"]
    ]
    return simple_table(
        rows,
        [
            ("Suite", "name"),
            ("Status", "status"),
            ("Samples", "samples"),
            ("Seconds", "seconds"),
            ("Failed check", "check"),
        ],
        title=f"hv verify (seed {data['seed']}, {data['seed_algorithm']})",
    )


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)
