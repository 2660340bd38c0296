import pytest
from utils import PROJECT_DIR

jinja2 = pytest.importorskip("jinja2")


def test_api_index_describes_the_package():
    env = jinja2.Environment(loader=jinja2.FileSystemLoader(PROJECT_DIR / "docs"))
    page = env.get_template("index.html.jinja2").render(versions=["latest", "0.1.0"])

    assert "<h1>gaugekit</h1>" in page
    assert "successive radii" in page
    assert 'href="0.1.0/index.html"' in page
    assert page.index("latest/index.html") < page.index("0.1.0/index.html")
