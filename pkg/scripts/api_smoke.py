import argparse
import asyncio
import time

import httpx

ENDPOINTS = (
    "/health/live",
    "/torus/fixed-points",
    "/torus/weights",
    "/torus/bb?ops=10,1",
    "/torus/poincare?ops=10,1",
    "/torus/orbits",
    "/verify/algebra?samples=10",
    "/metrics",
)


async def worker(client: httpx.AsyncClient, base_url: str, rounds: int, timeout: float) -> tuple[int, int]:
    success = 0
    failure = 0
    for _ in range(rounds):
        for path in ENDPOINTS:
            try:
                response = await client.get(f"{base_url}{path}", timeout=timeout)
                if response.status_code == 200:
                    success += 1
                else:
                    failure += 1
            except httpx.HTTPError:
                failure += 1
    return success, failure


async def run(base_url: str, concurrency: int, rounds: int, timeout: float) -> None:
    started = time.perf_counter()
    async with httpx.AsyncClient() as client:
        tasks = [worker(client, base_url, rounds, timeout) for _ in range(concurrency)]
        results = await asyncio.gather(*tasks)

    elapsed = time.perf_counter() - started
    total_success = sum(success for success, _ in results)
    total_failure = sum(failure for _, failure in results)

    print(f"total_requests={total_success + total_failure}")
    print(f"success={total_success}")
    print(f"failure={total_failure}")
    print(f"elapsed_seconds={elapsed:.2f}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Concurrent smoke run against the report API")
    parser.add_argument("--base-url", default="http://127.0.0.1:8000")
    parser.add_argument("--concurrency", type=int, default=4)
    parser.add_argument("--rounds", type=int, default=2)
    parser.add_argument("--timeout", type=float, default=120.0)
    args = parser.parse_args()

    asyncio.run(run(args.base_url, args.concurrency, args.rounds, args.timeout))
