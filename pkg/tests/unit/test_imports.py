"""Smoke-test that core packages are importable."""


def test_import_cisstkit():
    import cisstkit

    assert hasattr(cisstkit, "__version__")


def test_import_cisstkit_schemas():
    import cisstkit_schemas

    assert hasattr(cisstkit_schemas, "__version__")


def test_import_cli():
    from cisstkit.cli import cli

    assert cli.info.name == "cisst"
