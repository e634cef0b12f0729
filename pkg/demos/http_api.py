"""The JSON bodies a form UI receives from the read-only HTTP API.

This drives the ASGI app in-process so the demo needs no running server;
`geo-reverse serve --data data/fixture_a.csv --port 8000` exposes the same
endpoints over the network.

Run from the repository root:

    python3 demos/http_api.py
"""

from pathlib import Path

from fastapi.testclient import TestClient

from georeverse import create_app, load_gazetteer_csv

data = Path(__file__).resolve().parent.parent / "data" / "fixture_a.csv"
client = TestClient(create_app(load_gazetteer_csv(data)))

requests = [
    "/levels",
    "/children",
    "/children?parent=0101",
    "/search?q=pampas%20ver",
    "/resolve/020101",
    "/resolve/0101",  # a province: the reverse flow only accepts leaves
]

for url in requests:
    response = client.get(url)
    print(f"GET {url}  ->  {response.status_code}")
    print(f"  {response.content.decode('utf-8')}")
    print()
