import orjson
import pytest

from errors import UnreadableTable
from helpers.export import dumps
from helpers.export import jsonable
from helpers.export import read_table_csv
from helpers.export import table_as_dict
from helpers.export import write_json
from helpers.export import write_stats_csv
from helpers.export import write_table_csv
from objects.charvalues import character_table
from objects.partitions import Partition


def test_jsonable_keeps_small_ints():
    assert jsonable({"a": [1, -(2**63)], "b": True}) == {"a": [1, -(2**63)], "b": True}


def test_jsonable_stringifies_big_ints():
    assert jsonable([2**64, -(2**70)]) == [str(2**64), str(-(2**70))]
    assert orjson.loads(dumps({"value": 2**80})) == {"value": str(2**80)}


def test_jsonable_writes_partitions_as_text():
    assert jsonable({"lam": Partition((4, 3, 1))}) == {"lam": "4,3,1"}


def test_table_csv_can_be_read_back(tmp_path):
    table = character_table(5)
    path = tmp_path / "s5.csv"
    write_table_csv(path, table)

    n, rows = read_table_csv(path)
    assert n == 5
    assert set(rows) == set(table.rows)
    assert rows[Partition((3, 2))][Partition((5,))] == table.value(Partition((3, 2)), Partition((5,)))
    assert path.read_text().splitlines()[0].startswith(',5,"4,1"')


def test_table_json(tmp_path):
    path = tmp_path / "s3.json"
    write_json(path, table_as_dict(character_table(3)))
    assert orjson.loads(path.read_bytes()) == {
        "n": 3,
        "rows": ["3", "2,1", "1,1,1"],
        "cols": ["3", "2,1", "1,1,1"],
        "values": [[1, 1, 1], [-1, 0, 2], [1, -1, 1]],
    }


@pytest.mark.parametrize(
    "text",
    [
        "",
        ',3,"2,1"\n3,1,x\n',
        ',3,"2,1"\n3,1\n',
        ',3,"2,1"\n"2,2",1,1\n',
    ],
)
def test_bad_table_files(tmp_path, text):
    path = tmp_path / "bad.csv"
    path.write_text(text)
    with pytest.raises(UnreadableTable):
        read_table_csv(path)


def test_stats_csv(tmp_path):
    path = tmp_path / "stats.csv"
    write_stats_csv(path, [{"n": 7, "p_n": 15, "uncovered": 100, "bound": 262, "fraction": 0.44, "seed": 0, "ok": True}])
    assert path.read_text().splitlines() == ["n,p_n,uncovered,bound,fraction,seed", "7,15,100,262,0.44,0"]
