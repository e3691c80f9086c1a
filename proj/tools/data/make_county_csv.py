#!/usr/bin/env python3
"""Build data/us_counties.csv for the contiguous United States.

Inputs are read straight out of two PyPI wheels so the build needs no
network access beyond a package index:

  delphi-utils  delphi_utils/data/<vintage>/fips_pop.csv   (county population)
  plotly-geo    _plotly_geo/package_data/cb_2016_us_county_500k.*  (polygons, ALAND)

Usage:
  pip download --no-deps delphi-utils plotly-geo -d wheels/
  pip install pyshp shapely
  python3 tools/data/make_county_csv.py wheels/ data/us_counties.csv
"""
import csv
import glob
import io
import os
import sys
import zipfile

import shapefile  # pyshp
from shapely.geometry import shape

# Alaska, Hawaii and the territories are outside the contiguous service area.
EXCLUDED_STATES = {"02", "15", "60", "66", "69", "72", "78"}


def wheel(directory, prefix):
    hits = sorted(glob.glob(os.path.join(directory, prefix + "*.whl")))
    if not hits:
        sys.exit(f"no {prefix}*.whl in {directory}")
    return zipfile.ZipFile(hits[-1])


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    wheels, out_path = sys.argv[1], sys.argv[2]
    vintage = os.environ.get("POP_VINTAGE", "2020")

    delphi = wheel(wheels, "delphi_utils")
    text = delphi.read(f"delphi_utils/data/{vintage}/fips_pop.csv").decode()
    population = {row["fips"]: int(row["pop"]) for row in csv.DictReader(io.StringIO(text))}

    geo = wheel(wheels, "plotly_geo")
    base = "_plotly_geo/package_data/cb_2016_us_county_500k"
    reader = shapefile.Reader(
        shp=io.BytesIO(geo.read(base + ".shp")),
        shx=io.BytesIO(geo.read(base + ".shx")),
        dbf=io.BytesIO(geo.read(base + ".dbf")),
    )

    rows = []
    missing = []
    for rec in reader.iterShapeRecords():
        attrs = rec.record.as_dict()
        fips = attrs["GEOID"]
        if attrs["STATEFP"] in EXCLUDED_STATES:
            continue
        if fips not in population:
            missing.append(fips)
            continue
        centroid = shape(rec.shape.__geo_interface__).centroid
        rows.append((fips, attrs["NAME"], centroid.x, centroid.y,
                     population[fips], attrs["ALAND"] / 1e6))
    rows.sort()

    with open(out_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "name", "longitude", "latitude", "population", "land_area_km2"])
        for fips, name, lon, lat, pop, area in rows:
            w.writerow([fips, name, f"{lon:.6f}", f"{lat:.6f}", pop, f"{area:.3f}"])
    print(f"wrote {len(rows)} counties to {out_path}; {len(missing)} without population: {missing}",
          file=sys.stderr)


if __name__ == "__main__":
    main()
