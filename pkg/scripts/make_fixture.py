"""Regenerate the bundled synthetic dataset in src/qscore/data/.

    python scripts/make_fixture.py

Output is fully determined by SEED; rerunning it leaves the files unchanged.
"""

import csv
import random
from pathlib import Path

from qscore.records import COMPANY_COLUMNS, STUDENT_COLUMNS, UNIVERSITY_COLUMNS

SEED = 2013
OUT = Path(__file__).resolve().parents[1] / "src" / "qscore" / "data"

INDIAN_UNIVERSITIES = [
    ("Indian Institute of Science", "Bengaluru", "Karnataka"),
    ("Jawaharlal Nehru University", "New Delhi", "Delhi"),
    ("Banaras Hindu University", "Varanasi", "Uttar Pradesh"),
    ("Jamia Millia Islamia", "New Delhi", "Delhi"),
    ("University of Hyderabad", "Hyderabad", "Telangana"),
    ("Jadavpur University", "Kolkata", "West Bengal"),
    ("Anna University", "Chennai", "Tamil Nadu"),
    ("University of Delhi", "New Delhi", "Delhi"),
    ("Aligarh Muslim University", "Aligarh", "Uttar Pradesh"),
    ("Savitribai Phule Pune University", "Pune", "Maharashtra"),
    ("Amity University", "Noida", "Uttar Pradesh"),
    ("Manipal Academy of Higher Education", "Manipal", "Karnataka"),
    ("University of Calcutta", "Kolkata", "West Bengal"),
    ("Panjab University", "Chandigarh", "Punjab"),
    ("Osmania University", "Hyderabad", "Telangana"),
    ("Andhra University", "Visakhapatnam", "Andhra Pradesh"),
    ("University of Mumbai", "Mumbai", "Maharashtra"),
    ("Gauhati University", "Guwahati", "Assam"),
    ("University of Kashmir", "Srinagar", "Jammu and Kashmir"),
    ("Guru Gobind Singh Indraprastha University", "New Delhi", "Delhi"),
]
WORLD_UNIVERSITIES = [
    ("University of Oxford", "Oxford", "England", 1),
    ("Stanford University", "Stanford", "California", 3),
    ("ETH Zurich", "Zurich", "Zurich", 10),
    ("National University of Singapore", "Singapore", "Singapore", 22),
    ("University of Toronto", "Toronto", "Ontario", 27),
    ("Technical University of Munich", "Munich", "Bavaria", 41),
    ("University of Sydney", "Sydney", "New South Wales", 60),
    ("University of Glasgow", "Glasgow", "Scotland", 88),
    ("Monash University", "Melbourne", "Victoria", 120),
    ("University of Leeds", "Leeds", "England", 150),
]
COMPANIES = [
    ("Tata Consultancy Services, Ltd.", "IT", "Services", "Asia", "India"),
    ("Infosys", "IT", "Services", "Asia", "India"),
    ("Wipro", "IT", "Services", "Asia", "India"),
    ("HCL Technologies", "IT", "Services", "Asia", "India"),
    ("Tech Mahindra", "IT", "Services", "Asia", "India"),
    ("Larsen & Toubro", "Engineering", "Construction", "Asia", "India"),
    ("Reliance Industries", "Energy", "Petrochemicals", "Asia", "India"),
    ("HDFC Bank", "Finance", "Banking", "Asia", "India"),
    ("ICICI Bank", "Finance", "Banking", "Asia", "India"),
    ("Hindustan Unilever", "FMCG", "Consumer Goods", "Asia", "India"),
    ("Maruti Suzuki", "Automobile", "Passenger Vehicles", "Asia", "India"),
    ("Bharti Airtel", "Telecom", "Mobile", "Asia", "India"),
    ("Google", "IT", "Internet", "North America", "USA"),
    ("Microsoft", "IT", "Software", "North America", "USA"),
    ("Amazon", "IT", "E-commerce", "North America", "USA"),
    ("Accenture", "IT", "Consulting", "Europe", "Ireland"),
    ("Deloitte", "Finance", "Consulting", "Europe", "UK"),
    ("Cognizant", "IT", "Services", "North America", "USA"),
    ("Capgemini", "IT", "Consulting", "Europe", "France"),
    ("Mahindra & Mahindra", "Automobile", "Utility Vehicles", "Asia", "India"),
]
UNRANKED_UNIVERSITY = "Unlisted College of Arts"
UNRANKED_COMPANY = "Local Startup Pvt Ltd"

COHORTS = {2013: 30, 2014: 32}


def university_rows(rng):
    rows = []
    for year in COHORTS:
        ranks = list(range(1, len(INDIAN_UNIVERSITIES) + 1))
        rng.shuffle(ranks)
        for i, ((name, city, state), rank) in enumerate(zip(INDIAN_UNIVERSITIES, ranks)):
            rows.append({
                "univ_code": f"IN{i + 1:03d}", "univ_name": name, "univ_city": city,
                "univ_state": state, "univ_score": f"{100 - 2.5 * rank + rng.random():.2f}",
                "univ_rank": rank, "uryear": year, "scope": "country",
            })
        for i, (name, city, state, rank) in enumerate(WORLD_UNIVERSITIES):
            rank = rank + (year - 2013) * rng.randint(0, 3)
            rows.append({
                "univ_code": f"W{i + 1:03d}", "univ_name": name, "univ_city": city,
                "univ_state": state, "univ_score": f"{100 - 0.4 * rank:.2f}",
                "univ_rank": rank, "uryear": year, "scope": "world",
            })
    return rows


def company_rows(rng):
    rows = []
    for year in COHORTS:
        ranks = rng.sample(range(1, 31), len(COMPANIES))
        ranks[ranks.index(min(ranks))] = 1
        ranks[ranks.index(max(ranks))] = 30
        for (name, sector, sub, area, country), rank in zip(COMPANIES, ranks):
            rows.append({
                "comp_name": name, "comp_sector": sector, "comp_subsector": sub,
                "comp_area": area, "comp_country": country,
                "comp_para1": f"{rng.uniform(1e3, 5e5):.1f}", "comp_para2": f"{rng.uniform(1e2, 5e4):.1f}",
                "comp_para3": f"{rng.uniform(0, 40):.2f}", "comp_para4": f"{rng.uniform(0, 1):.3f}",
                "comp_rank": rank, "cryear": year,
            })
    return rows


def messy(name, rng):
    """Same name as a data-entry clerk might type it."""
    choice = rng.random()
    if choice < 0.15:
        return name.upper()
    if choice < 0.3:
        return "  " + name.replace(" ", "  ", 1) + " "
    return name


def student_rows(rng):
    rows = []
    sid = 1000
    for year, n in COHORTS.items():
        for k in range(n):
            sid += 1
            r = rng.random()
            univ = comp = ""
            package = ""
            univ_f = comp_f = "N"
            final = rng.choices(["Pass", "Fail", "Withdrawn"], weights=[85, 10, 5])[0]
            if final == "Pass" and r < 0.38:
                univ_f = "Y"
                if k == 3:
                    univ = UNRANKED_UNIVERSITY
                elif rng.random() < 0.2:
                    univ = rng.choice(WORLD_UNIVERSITIES)[0]
                else:
                    univ = messy(rng.choice(INDIAN_UNIVERSITIES)[0], rng)
            elif final == "Pass" and r < 0.80:
                comp_f = "Y"
                comp = UNRANKED_COMPANY if k == 5 else messy(rng.choice(COMPANIES)[0], rng)
                package = f"{rng.randint(6, 36) / 2:.1f}"
            rows.append({
                "course": "B.Tech Computer Engineering", "eyear": year, "code": "BTCE", "id": sid,
                "gender": rng.choice(["M", "F"]),
                "region": rng.choice(["North", "South", "East", "West", "North East"]),
                "he": rng.choice(["A Level or Equivalent", "Lower Than A Level", "HE Qualification"]),
                "imd": rng.choice(["0-10%", "10-20%", "20-30%", "30-40%", "40-50%", "50-60%"]),
                "age": rng.choice(["0-35", "35-55"]),
                "prev_attempt": str(rng.choice([0, 0, 0, 1])),
                "credit": str(rng.choice([120, 150, 180])),
                "disability": rng.choice(["N"] * 9 + ["Y"]),
                "final_result": final, "univ": univ, "comp": comp, "package": package,
                "univ_f": univ_f, "comp_f": comp_f, "q_score": "0",
            })
    return rows


def write(path, columns, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=columns, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


def main():
    rng = random.Random(SEED)
    OUT.mkdir(parents=True, exist_ok=True)
    write(OUT / "university_ranks.csv", UNIVERSITY_COLUMNS + ("scope",), university_rows(rng))
    write(OUT / "company_ranks.csv", COMPANY_COLUMNS, company_rows(rng))
    write(OUT / "students.csv", STUDENT_COLUMNS, student_rows(rng))


if __name__ == "__main__":
    main()
