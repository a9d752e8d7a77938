#!/usr/bin/env python3
"""Regenerate the scripted-server fixtures by recording a live service.

Starts the real server, performs the exact request sequences the UI tests
replay, and freezes every exchange (request line, body, status, response)
verbatim. Needs the Python package installed:

    python3 generate.py
"""

import json
import socket
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import httpx

HERE = Path(__file__).parent


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class Recorder:
    def __init__(self, client: httpx.Client):
        self.client = client
        self.entries: list[dict] = []

    def call(self, method: str, path: str, body: dict | None = None) -> dict:
        response = self.client.request(method, path, json=body)
        entry: dict = {"method": method, "path": path}
        if body is not None:
            entry["body"] = body
        entry["status"] = response.status_code
        entry["response"] = response.json()
        self.entries.append(entry)
        return entry["response"]


def write(name: str, payload) -> None:
    (HERE / name).write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {name}")


def record_h2c_script(client: httpx.Client) -> None:
    """The scripted human-vs-computer walk test/app.test.ts replays."""
    rec = Recorder(client)
    view = rec.call("POST", "/sessions", {"mode": "H2C", "leadPlayer": "x"})
    sid = view["id"]
    rec.call("POST", f"/sessions/{sid}/moves", {"row": 1, "col": 1})
    rec.call("POST", f"/sessions/{sid}/ai-move")
    # clicking the same cell again is the error-banner case
    rec.call("POST", f"/sessions/{sid}/moves", {"row": 1, "col": 1})
    rec.call("POST", f"/sessions/{sid}/navigate", {"target": "first"})
    rec.call("POST", f"/sessions/{sid}/navigate", {"target": "last"})
    rec.call("PUT", f"/sessions/{sid}/setup", {"mode": "H2H", "leadPlayer": "o"})
    rec.call("POST", f"/sessions/{sid}/initialize")
    rec.call("POST", f"/sessions/{sid}/stop")
    rec.call("GET", f"/sessions/{sid}")
    write("h2c-script.json", rec.entries)


def record_c2c_draw(client: httpx.Client) -> None:
    rec = Recorder(client)
    view = rec.call("POST", "/sessions", {"mode": "C2C", "leadPlayer": "x"})
    sid = view["id"]
    for _ in range(9):
        view = rec.call("POST", f"/sessions/{sid}/ai-move")
    assert view["status"] == "Draw", view["status"]
    assert view["stats"]["drawCount"] == 1, view["stats"]
    write("c2c-draw.json", rec.entries)


def record_view_sample(client: httpx.Client) -> None:
    """20 varied server views for the control-enablement sweep.

    Random sessions are staged as save files and pulled back through the
    load endpoint, so every stored view is a verbatim server response.
    """
    from tictactoe.session import random_valid_session, save_session

    views: list[dict] = []
    with tempfile.TemporaryDirectory() as tmp:
        seed = 0
        while len(views) < 20 and seed < 500:
            session = random_valid_session(seed)
            seed += 1
            path = Path(tmp) / "staged.json"
            save_session(session, path)
            response = client.post("/sessions/load", json={"path": str(path)})
            response.raise_for_status()
            view = response.json()
            views.append(view)

    terminal = sum(1 for v in views if v["result"] != "c")
    rewound = sum(1 for v in views if v["cursor"] < v["movesCount"])
    modes = {v["mode"] for v in views}
    assert terminal >= 2, f"want terminal views in the sample, got {terminal}"
    assert rewound >= 3, f"want rewound views in the sample, got {rewound}"
    assert modes == {"H2H", "H2C", "C2H", "C2C"}, modes
    write("views-20.json", views)


def main() -> int:
    port = free_port()
    server = subprocess.Popen(
        [sys.executable, "-m", "tictactoe", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        with httpx.Client(base_url=f"http://127.0.0.1:{port}", timeout=5.0) as client:
            for _ in range(100):
                try:
                    client.post("/sessions", json={})
                    break
                except httpx.TransportError:
                    time.sleep(0.05)
            record_h2c_script(client)
            record_c2c_draw(client)
            record_view_sample(client)
    finally:
        server.terminate()
        server.wait(timeout=10)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
