import hesspave


def test_version():
    assert hesspave.__version__
    assert hesspave.SCHEMA_VERSION == 1


def test_poincare_and_cells():
    assert hesspave.poincare([2, 2]) == [1, 3, 2]
    assert hesspave.poincare([2, 2, 2])[-1] == 5
    cells = hesspave.cells([2, 3, 1, 1], "0,0,1,2,3,5,5")
    match = [c for c in cells if c["w"] == [4, 3, 1, 6, 5, 7, 2]]
    assert match and match[0]["dim"] == 5
    assert match[0]["tableau"] == [[1, 4], [2, 5, 6], [7], [3]]


def test_r0():
    assert hesspave.r0([4, 4, 3, 1], "shift:3") == [[3, 6, 9, 12], [2, 5, 8, 11], [4, 7, 10], [1]]
    assert hesspave.r0([2], "0,0") is None


def test_tableau_of():
    assert hesspave.tableau_of([3, 2, 6, 1, 7, 4, 5], [3, 2, 2]) == [[1, 3, 5], [2, 7], [4, 6]]


def test_point_count():
    rep = hesspave.point_count([2, 2], q=2)
    assert rep["total"] == 15 and rep["match"]


def test_budget_and_input_errors():
    try:
        hesspave.point_count([2, 2, 2], budget_bits=4)
    except hesspave.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")
    try:
        hesspave.poincare([2, 2], "1,1,1,1")
    except hesspave.InputError:
        pass
    else:
        raise AssertionError("expected InputError")


def test_run_json():
    code, doc = hesspave.run_json("generic-flag", [2, 2, 2], w=[3, 6, 2, 1, 5, 4], h=[0, 1, 1, 1, 3, 4])
    assert code == 0
    assert doc["zero_coordinates"] == ["x_{1,2}"]
    assert doc["columns"][0]["text"].startswith("e3")
    code, doc = hesspave.run_json("count", [2, 2], q=3, budget_bits=2)
    assert code == 3 and doc["error"] == "budget"
    code, doc = hesspave.run_json("cells", "2,x")
    assert code == 2 and doc["error"] == "input"
