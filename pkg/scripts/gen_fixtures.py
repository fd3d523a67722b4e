#!/usr/bin/env python3
"""Regenerate the fixture CSVs under apps/ (seeded, deterministic).

The universities file keeps the ten well-known rows first; everything after
that is synthetic filler to reach the documented record counts.
"""

from __future__ import annotations

import csv
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
APPS = ROOT / "apps"

# --- universities (1,497 rows; first 10 are the reference rows) -----------

REFERENCE_ROWS = [
    # university, continent, country, city, public/private, research output, size, subject range, lat, lon
    ("Aalborg University", "Europe", "Denmark", "Aalborg", "Public", "Very High", "L", "FC", 57.0169, 9.9787),
    ("Aalto University", "Europe", "Finland", "Espoo", "Public", "Very High", "L", "FO", 60.1841, 24.8301),
    ("Aarhus University", "Europe", "Denmark", "Aarhus", "Public", "Very High", "L", "FC", 56.1681, 10.2027),
    ("Abai Kazakh National Pedagogical University", "Asia", "Kazakhstan", "Almaty", "Public", "Medium", "L", "CO", 43.2389, 76.9454),
    ("Aberystwyth University", "Europe", "United Kingdom", "Aberystwyth", "Public", "Very High", "M", "CO", 52.4140, -4.0810),
    ("Abo Akademi University", "Europe", "Finland", "Turku", "Public", "Very High", "M", "CO", 60.4486, 22.2777),
    ("Abu Dhabi University", "Asia", "United Arab Emirates", "Abu Dhabi", "Private", "Very High", "S", "SP", 24.3568, 54.5058),
    ("Adam Mickiewicz University, Poznań", "Europe", "Poland", "Poznań", "Public", "Very High", "XL", "CO", 52.4686, 16.9214),
    ("Addis Ababa University", "Africa", "Ethiopia", "Addis Ababa", "", "High", "XL", "CO", 9.0370, 38.7636),
    ("AGH University of Science and Technology", "Europe", "Poland", "Krakow", "Public", "Very High", "L", "CO", 50.0665, 19.9189),
]

PLACES = {
    "Europe": [
        ("Germany", [("Berlin", 52.52, 13.40), ("Munich", 48.14, 11.58), ("Hamburg", 53.55, 9.99)]),
        ("France", [("Paris", 48.86, 2.35), ("Lyon", 45.76, 4.84), ("Toulouse", 43.60, 1.44)]),
        ("United Kingdom", [("London", 51.51, -0.13), ("Manchester", 53.48, -2.24), ("Edinburgh", 55.95, -3.19)]),
        ("Spain", [("Madrid", 40.42, -3.70), ("Barcelona", 41.39, 2.17)]),
        ("Italy", [("Rome", 41.90, 12.50), ("Milan", 45.46, 9.19)]),
        ("Netherlands", [("Amsterdam", 52.37, 4.90), ("Delft", 52.01, 4.36)]),
        ("Sweden", [("Stockholm", 59.33, 18.07), ("Lund", 55.70, 13.19)]),
        ("Poland", [("Warsaw", 52.23, 21.01), ("Wroclaw", 51.11, 17.04)]),
    ],
    "Asia": [
        ("China", [("Beijing", 39.90, 116.41), ("Shanghai", 31.23, 121.47), ("Wuhan", 30.59, 114.31)]),
        ("Japan", [("Tokyo", 35.68, 139.69), ("Kyoto", 35.01, 135.77), ("Osaka", 34.69, 135.50)]),
        ("South Korea", [("Seoul", 37.57, 126.98), ("Daejeon", 36.35, 127.38)]),
        ("India", [("Delhi", 28.70, 77.10), ("Mumbai", 19.08, 72.88), ("Chennai", 13.08, 80.27)]),
        ("Malaysia", [("Kuala Lumpur", 3.14, 101.69)]),
        ("Turkey", [("Ankara", 39.93, 32.86), ("Istanbul", 41.01, 28.98)]),
    ],
    "North America": [
        ("United States", [("Boston", 42.36, -71.06), ("Chicago", 41.88, -87.63), ("Austin", 30.27, -97.74), ("Seattle", 47.61, -122.33)]),
        ("Canada", [("Toronto", 43.65, -79.38), ("Vancouver", 49.28, -123.12), ("Montreal", 45.50, -73.57)]),
        ("Mexico", [("Mexico City", 19.43, -99.13), ("Monterrey", 25.69, -100.32)]),
    ],
    "South America": [
        ("Brazil", [("Sao Paulo", -23.55, -46.63), ("Rio de Janeiro", -22.91, -43.17)]),
        ("Chile", [("Santiago", -33.45, -70.67)]),
        ("Argentina", [("Buenos Aires", -34.60, -58.38)]),
    ],
    "Africa": [
        ("South Africa", [("Cape Town", -33.92, 18.42), ("Johannesburg", -26.20, 28.05)]),
        ("Egypt", [("Cairo", 30.04, 31.24)]),
        ("Kenya", [("Nairobi", -1.29, 36.82)]),
    ],
    "Oceania": [
        ("Australia", [("Sydney", -33.87, 151.21), ("Melbourne", -37.81, 144.96), ("Perth", -31.95, 115.86)]),
        ("New Zealand", [("Auckland", -36.85, 174.76), ("Wellington", -41.29, 174.78)]),
    ],
}

NAME_A = ["National", "Technical", "Federal", "Metropolitan", "State", "Central",
          "Polytechnic", "Catholic", "Open", "Maritime", "Agricultural", "Medical"]
NAME_B = ["Institute of Technology", "University", "University of Science",
          "University of Applied Sciences", "Research University",
          "University of the Arts", "University of Economics"]

OUTPUTS = ["Very High", "High", "Medium", "Low"]
SIZES = ["XL", "L", "M", "S"]
SUBJECTS = ["FC", "FO", "CO", "SP"]


def gen_universities(rng: random.Random) -> None:
    header = ["university", "continent", "country", "city", "public_private",
              "research_output", "university_size", "subject_range",
              "overall_score", "citations_score", "lat", "lon"]
    rows = []
    for uni, cont, country, city, pp, ro, size, subj, lat, lon in REFERENCE_ROWS:
        score = round(rng.uniform(55, 95), 1)
        rows.append([uni, cont, country, city, pp, ro, size, subj,
                     score, round(rng.uniform(20, 99), 1), lat, lon])
    seen = {r[0] for r in rows}
    continents = list(PLACES)
    weights = [36, 30, 14, 6, 6, 8]
    while len(rows) < 1497:
        cont = rng.choices(continents, weights=weights)[0]
        country, cities = rng.choice(PLACES[cont])
        city, lat, lon = rng.choice(cities)
        name = f"{rng.choice(NAME_A)} {rng.choice(NAME_B)} of {city}"
        if name in seen:
            name = f"{name} {sum(1 for r in rows if r[3] == city) + 1}"
        if name in seen:
            continue
        seen.add(name)
        # top-band scores are rare, like a real ranking table
        score = round(min(99.6, rng.expovariate(1 / 14.0) + 40.0), 1)
        rows.append([
            name, cont, country, city,
            rng.choices(["Public", "Private", ""], weights=[70, 25, 5])[0],
            rng.choice(OUTPUTS), rng.choice(SIZES), rng.choice(SUBJECTS),
            score, round(rng.uniform(5, 99), 1),
            round(lat + rng.uniform(-0.3, 0.3), 4),
            round(lon + rng.uniform(-0.3, 0.3), 4),
        ])
    _write(APPS / "universities.csv", header, rows)
    _write(APPS / "universities_mini.csv", header, rows[:10])


# --- literature (200 rows) ------------------------------------------------

JOURNALS = ["Remote Sensing", "Remote Sensing of Environment",
            "ISPRS Journal of Photogrammetry and Remote Sensing",
            "GIScience & Remote Sensing", "International Journal of Remote Sensing",
            "Science of the Total Environment", "Journal of Hydrology",
            "Environmental Monitoring and Assessment", "IEEE Access"]
TOPICS = ["wetland", "cropland", "burned area", "land cover", "surface water",
          "forest", "urban expansion", "soil moisture", "glacier", "mangrove",
          "air quality", "drought"]
VERBS = ["mapping", "monitoring", "classification", "detection", "estimation"]
METHOD_MACRO = ["Machine Learning", "Deep Learning", "Computer Vision"]
METHOD_DETAIL = {"Machine Learning": ["Random Forest", "Support Vector Machine", "Gradient Boosting", "CART"],
                 "Deep Learning": ["CNN", "U-Net", "LSTM", "Transformer"],
                 "Computer Vision": ["Object Detection", "Segmentation", "Change Detection"]}
RS_DATA = ["Landsat", "Sentinel-1", "Sentinel-2", "MODIS", "PlanetScope", "Drone"]
METRICS = ["Overall Accuracy", "Kappa", "F1-score", "RMSE", "R2", "Precision", "Recall"]
FOCUS = ["Application", "Method"]
STUDY_AREAS = ["Global", "National", "Regional", "Local"]
CLOUD = ["GEE only", "GEE + Colab", "GEE + AWS", "GEE + local"]
SOFTWARE = ["Python", "R", "QGIS", "ArcGIS", "TensorFlow", "PyTorch", "scikit-learn"]

LIT_PLACES = {
    "United States": [("Boulder", 40.01, -105.27), ("College Park", 38.99, -76.94),
                      ("Knoxville", 35.96, -83.92), ("Tempe", 33.42, -111.94),
                      ("Madison", 43.07, -89.40), ("Albuquerque", 35.08, -106.65)],
    "China": [("Beijing", 39.90, 116.41), ("Wuhan", 30.59, 114.31), ("Nanjing", 32.06, 118.80)],
    "Canada": [("St. John's", 47.56, -52.71), ("Toronto", 43.65, -79.38)],
    "Italy": [("Bolzano", 46.50, 11.35), ("Rome", 41.90, 12.50)],
    "Spain": [("Barcelona", 41.39, 2.17)],
    "Australia": [("Canberra", -35.28, 149.13), ("Brisbane", -27.47, 153.03)],
    "Germany": [("Munich", 48.14, 11.58), ("Leipzig", 51.34, 12.37)],
    "India": [("Hyderabad", 17.39, 78.49), ("Roorkee", 29.87, 77.90)],
    "Brazil": [("Sao Paulo", -23.55, -46.63)],
    "Netherlands": [("Enschede", 52.22, 6.90)],
}


def gen_literature(rng: random.Random) -> None:
    header = ["title", "year", "journal", "first_author", "institution", "country",
              "lat", "lon", "application_focus", "study_area", "method_macro",
              "method_detailed", "rs_data", "models_compared", "evaluation_metrics",
              "keywords", "compute_cloud", "software", "cited_by", "scholar_url"]
    surnames = ["Long", "Teluguntla", "Orengo", "Mahdianpari", "Greifeneder", "Chen",
                "Silva", "Kumar", "Okafor", "Tanaka", "Novak", "Jensen", "Garcia",
                "Smith", "Wang", "Mueller", "Rossi", "Khan", "Lee", "Brown"]
    rows = []
    seen_titles = set()
    countries = list(LIT_PLACES)
    # 50 US-based first-author institutions, per the reference map
    assignment = ["United States"] * 50 + rng.choices(
        [c for c in countries if c != "United States"], k=150)
    rng.shuffle(assignment)
    for i in range(200):
        country = assignment[i]
        city, lat, lon = rng.choice(LIT_PLACES[country])
        topic = rng.choice(TOPICS)
        verb = rng.choice(VERBS)
        macro = rng.choice(METHOD_MACRO)
        detail = rng.choice(METHOD_DETAIL[macro])
        data = rng.sample(RS_DATA, rng.randint(1, 3))
        title = f"{topic.capitalize()} {verb} with {detail} and {data[0]} imagery on a cloud platform"
        if title in seen_titles:
            title = f"Large-scale {title.lower()}"
        seen_titles.add(title)
        keywords = sorted({topic, verb, detail.lower(), "google earth engine",
                           rng.choice(["time series", "cloud computing", "big data",
                                       "image analysis", "geospatial"])})
        rows.append([
            title, 2015 + rng.choices(range(8), weights=[2, 3, 5, 9, 16, 26, 30, 9])[0],
            rng.choice(JOURNALS), rng.choice(surnames),
            f"{rng.choice(['University of', 'Institute of', 'National Laboratory of'])} {city}",
            country,
            round(lat + rng.uniform(-0.05, 0.05), 4), round(lon + rng.uniform(-0.05, 0.05), 4),
            rng.choices(FOCUS, weights=[3, 1])[0], rng.choice(STUDY_AREAS),
            macro, detail,
            ",".join(data),
            ",".join(rng.sample(sum(METHOD_DETAIL.values(), []), rng.randint(1, 3))),
            ",".join(sorted(rng.sample(METRICS, rng.randint(1, 3)))),
            ",".join(keywords),
            rng.choice(CLOUD),
            ",".join(sorted(rng.sample(SOFTWARE, rng.randint(1, 3)))),
            rng.randint(0, 250),
            f"https://scholar.example.org/paper/{i:03d}",
        ])
    _write(APPS / "literature.csv", header, rows)


# --- fellows (71 rows) ----------------------------------------------------

FELLOW_STATES = {
    "Wisconsin": [("Madison", 43.07, -89.40)],
    "Colorado": [("Denver", 39.74, -104.99), ("Boulder", 40.01, -105.27)],
    "Arizona": [("Tempe", 33.42, -111.94), ("Tucson", 32.22, -110.97)],
    "New York": [("Buffalo", 42.89, -78.88), ("Syracuse", 43.05, -76.15)],
    "California": [("Los Angeles", 34.05, -118.24), ("Santa Barbara", 34.42, -119.70)],
    "Texas": [("Austin", 30.27, -97.74), ("College Station", 30.63, -96.33)],
    "Georgia": [("Atlanta", 33.75, -84.39)],
    "Pennsylvania": [("University Park", 40.80, -77.86)],
    "New Mexico": [("Albuquerque", 35.08, -106.65), ("Las Cruces", 32.31, -106.78)],
    "Tennessee": [("Knoxville", 35.96, -83.92)],
    "Oregon": [("Corvallis", 44.56, -123.26)],
    "Minnesota": [("Minneapolis", 44.98, -93.27)],
}
INTERESTS = ["gis", "remote sensing", "cartography", "spatial analysis",
             "geovisualization", "urban planning", "hydrology", "climate change",
             "machine learning", "community mapping", "spatial statistics",
             "land use", "public health", "transportation"]
DEGREES = ["Geography", "GIScience", "Environmental Science", "Urban Planning",
           "Computer Science", "Geology"]
FIRST = ["Alicia", "Allison", "Amy", "Brandi", "Carla", "Dana", "Elena", "Fatima",
         "Grace", "Hana", "Imani", "Jing", "Karen", "Leila", "Maria", "Nadia",
         "Olivia", "Priya", "Quinn", "Rosa", "Sara", "Tanya", "Uma", "Valerie",
         "Wendy", "Ximena", "Yuki", "Zoe"]
LAST = ["Cowart", "Bailey", "Frazier", "Gaertner", "Hughes", "Ibarra", "Jordan",
        "Kim", "Lopez", "Moreno", "Nguyen", "Olsen", "Park", "Quintana", "Rivera",
        "Schmidt", "Torres", "Usman", "Vega", "Walker", "Xu", "Young", "Zhang"]
WORKSHOPS = {2018: "Madison, Wisconsin", 2019: "Washington, DC",
             2021: "Virtual", 2022: "Blue Mountain Lake, New York"}


def gen_fellows(rng: random.Random) -> None:
    header = ["name", "role", "cohort_number", "cohort_year", "workshop_location",
              "institution", "department", "city", "state", "country", "lat", "lon",
              "research_interests", "degree_focus", "email", "website"]
    cohorts = {2018: "cohort 1", 2019: "cohort 2", 2021: "cohort 3", 2022: "cohort 4"}
    names = set()
    rows = []
    roles = ["cohort"] * 55 + ["mentor"] * 10 + ["speaker"] * 4 + ["evaluator"] * 2
    for i in range(71):
        while True:
            name = f"{rng.choice(FIRST)} {rng.choice(LAST)}"
            if name not in names:
                names.add(name)
                break
        state = rng.choice(list(FELLOW_STATES))
        city, lat, lon = rng.choice(FELLOW_STATES[state])
        year = rng.choice(list(cohorts))
        role = roles[i]
        slug = name.lower().replace(" ", ".")
        rows.append([
            name, role, cohorts[year], year, WORKSHOPS[year],
            f"University of {city}", f"Department of {rng.choice(DEGREES)}",
            city, state, "United States",
            round(lat + rng.uniform(-0.02, 0.02), 4), round(lon + rng.uniform(-0.02, 0.02), 4),
            ",".join(sorted(rng.sample(INTERESTS, rng.randint(2, 4)))),
            ",".join(sorted(rng.sample(DEGREES, rng.randint(1, 2)))),
            f"{slug}@example.edu", f"https://example.edu/~{slug.replace('.', '')}",
        ])
    _write(APPS / "fellows.csv", header, rows)


def _write(path: Path, header: list[str], rows: list[list]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


if __name__ == "__main__":
    gen_universities(random.Random(11))
    gen_literature(random.Random(22))
    gen_fellows(random.Random(33))
