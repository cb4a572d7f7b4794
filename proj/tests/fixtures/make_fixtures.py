#!/usr/bin/env python3
"""Regenerates the committed test fixtures.

Every fixture is produced from a fixed numpy PCG64 seed so the files can be
rebuilt bit-for-bit. The C++ tests only read the committed outputs.
"""

import datetime as dt
import pathlib

import numpy as np

HERE = pathlib.Path(__file__).resolve().parent


def write_series(name, values):
    with open(HERE / name, "w", newline="\n") as f:
        f.write("minute_index,value\n")
        for i, v in enumerate(values):
            f.write(f"{i},{v:.6f}\n")


def hourly_multiseasonal(n=2000, seed=20240601):
    """Hourly demand: linear trend x daily x weekly factors x 5% noise."""
    rng = np.random.default_rng(seed)
    t = np.arange(n)
    hour = t % 24
    day = (t // 24) % 7
    daily = 1.0 + 0.45 * np.sin(2.0 * np.pi * (hour - 8) / 24.0)
    weekly_by_day = np.array([1.20, 1.20, 1.15, 1.15, 1.10, 0.65, 0.55])
    weekly_by_day = weekly_by_day / weekly_by_day.mean()
    weekly = weekly_by_day[day]
    trend = 100.0 + 0.05 * t
    noise = 1.0 + 0.05 * rng.standard_normal(n)
    return trend * daily * weekly * noise


def hourly_noise(n=2000, seed=7):
    rng = np.random.default_rng(seed)
    return 100.0 * (1.0 + 0.05 * rng.standard_normal(n))


def daily_cycle(n=600):
    """Trend-free 24-period profile scaled to 100."""
    profile = 1.0 + 0.5 * np.sin(2.0 * np.pi * np.arange(24) / 24.0)
    return 100.0 * profile[np.arange(n) % 24]


def replay_fixture(n=300, seed=99):
    """Trend plus noise, no seasonality: fitness landscape for the optimizer."""
    rng = np.random.default_rng(seed)
    t = np.arange(n)
    return 50.0 + 0.2 * t + 3.0 * rng.standard_normal(n)


def white_noise(n=300, seed=12345):
    rng = np.random.default_rng(seed)
    return rng.standard_normal(n)


MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"]
HOSTS = ["host1.example.com", "10.0.0.7", "crawler.example.org", "dialup-42.isp.net"]
PATHS = ["/", "/index.html", "/images/logo.gif", "/cgi-bin/search?q=x", "/docs/paper.ps"]


def clf_line(ts_local, offset_minutes, rng):
    sign = "+" if offset_minutes >= 0 else "-"
    off = abs(offset_minutes)
    stamp = (f"{ts_local.day:02d}/{MONTHS[ts_local.month - 1]}/{ts_local.year:04d}:"
             f"{ts_local.hour:02d}:{ts_local.minute:02d}:{ts_local.second:02d} "
             f"{sign}{off // 60:02d}{off % 60:02d}")
    host = HOSTS[rng.integers(len(HOSTS))]
    path = PATHS[rng.integers(len(PATHS))]
    status = [200, 304, 404][rng.integers(3)]
    size = int(rng.integers(0, 50000))
    return f'{host} - - [{stamp}] "GET {path} HTTP/1.0" {status} {size}'


def clf_fixtures(n=1000, seed=31):
    """1,000 well-formed lines spread over ~40 UTC minutes with mixed zone
    offsets; a second file injects 10 malformed lines. Expected per-minute
    counts are written alongside as the oracle."""
    rng = np.random.default_rng(seed)
    base = dt.datetime(1995, 6, 1, 6, 0, 0, tzinfo=dt.timezone.utc)
    offsets = [-360, 0, 330, -300]
    seconds = np.sort(rng.integers(0, 40 * 60, size=n))
    lines = []
    counts = {}
    for s in seconds:
        utc = base + dt.timedelta(seconds=int(s))
        off = offsets[rng.integers(len(offsets))]
        local = (utc + dt.timedelta(minutes=off)).replace(tzinfo=None)
        lines.append(clf_line(local, off, rng))
        minute = utc.replace(second=0)
        counts[minute] = counts.get(minute, 0) + 1

    with open(HERE / "clf_1000.log", "w", newline="\n") as f:
        f.write("\n".join(lines) + "\n")

    malformed = [
        "garbage line without any timestamp",
        'h - - [01/Jun/1995:00:00:59] "GET / HTTP/1.0" 200 1',
        'h - - [32/Jun/1995:00:00:59 -0600] "GET / HTTP/1.0" 200 1',
        'h - - [01/Foo/1995:00:00:59 -0600] "GET / HTTP/1.0" 200 1',
        'h - - [01/Jun/1995:25:00:59 -0600] "GET / HTTP/1.0" 200 1',
        'h - - [01/Jun/1995:00:61:59 -0600] "GET / HTTP/1.0" 200 1',
        'h - - 01/Jun/1995:00:00:59 -0600 "GET / HTTP/1.0" 200 1',
        'h - - [01/Jun/1995:00:00:59 -0600 "GET / HTTP/1.0" 200 1',
        "",
        'h - - [31/Feb/1995:00:00:59 +0000] "GET / HTTP/1.0" 200 1',
    ]
    mixed = list(lines)
    positions = sorted(rng.choice(len(lines), size=len(malformed), replace=False))
    for pos, bad in zip(reversed(positions), reversed(malformed)):
        mixed.insert(int(pos), bad)
    with open(HERE / "clf_1000_malformed.log", "w", newline="\n") as f:
        f.write("\n".join(mixed) + "\n")

    first = min(counts)
    last = max(counts)
    with open(HERE / "clf_1000_counts.csv", "w", newline="\n") as f:
        f.write("timestamp,count\n")
        m = first
        while m <= last:
            f.write(f"{m.strftime('%Y-%m-%dT%H:%M:%SZ')},{counts.get(m, 0)}\n")
            m += dt.timedelta(minutes=1)


def main():
    write_series("hourly_multiseasonal_2000.csv", hourly_multiseasonal())
    write_series("hourly_noise_2000.csv", hourly_noise())
    write_series("daily_cycle_600.csv", daily_cycle())
    write_series("replay_trend_300.csv", replay_fixture())
    write_series("white_noise_300.csv", white_noise())
    clf_fixtures()


if __name__ == "__main__":
    main()
