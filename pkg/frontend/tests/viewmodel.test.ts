import { describe, expect, it } from "vitest";
import { Api } from "../src/api";
import { ViewModel } from "../src/viewmodel";
import { FakeServer } from "./server";

async function openVm() {
  const server = new FakeServer();
  const vm = new ViewModel(new Api("", server.fetch), "fake");
  await vm.open();
  return { server, vm };
}

describe("ViewModel", () => {
  it("opens a session and exposes initial state", async () => {
    const { vm } = await openVm();
    expect(vm.sessionId).toBe("s1");
    expect(vm.current.counter).toEqual({ selected: 6, total: 6 });
    expect(vm.config?.title).toBe("Fake App");
    expect(vm.current).toEqual(vm.initialState);
  });

  it("one interaction produces exactly one mutation request", async () => {
    const { server, vm } = await openVm();
    await vm.setFilter("cat", { type: "value_set", values: ["alpha"] });
    await vm.clearFilter("cat");
    await vm.resetAll();
    expect(server.mutations).toEqual([
      "PUT /sessions/s1/filters/cat",
      "DELETE /sessions/s1/filters/cat",
      "DELETE /sessions/s1/filters",
    ]);
  });

  it("publishes each new payload to subscribers", async () => {
    const { vm } = await openVm();
    const seen: number[] = [];
    vm.subscribe((state) => seen.push(state.counter.selected));
    await vm.setFilter("cat", { type: "value_set", values: ["alpha"] });
    await vm.setFilter("score", { type: "range", lo: 0, hi: 20 });
    expect(seen).toEqual([2, 1]);
    expect(vm.activeFilter("cat")).toEqual({ type: "value_set", values: ["alpha"] });
  });

  it("collapses a burst of mutations to first and last (latest wins)", async () => {
    const { server, vm } = await openVm();
    server.latency = true;
    const burst = Promise.all([
      vm.setFilter("score", { type: "range", lo: 0, hi: 30 }),
      vm.setFilter("score", { type: "range", lo: 0, hi: 50 }),
      vm.setFilter("score", { type: "range", lo: 0, hi: 80 }),
    ]);
    // release the in-flight request, then the one queued behind it
    await Promise.resolve();
    server.flush();
    await Promise.resolve();
    await Promise.resolve();
    server.flush();
    server.latency = false;
    server.flush();
    await burst;
    expect(server.mutations.length).toBe(2);
    expect(vm.current.counter.selected).toBe(5); // score < 80 keeps 5 of 6
  });

  it("reset returns the initial payload", async () => {
    const { vm } = await openVm();
    await vm.setFilter("cat", { type: "value_set", values: ["beta"] });
    const after = await vm.resetAll();
    expect(after).toEqual(vm.initialState);
  });

  it("re-creates the session after a 410 and publishes fresh state", async () => {
    const { server, vm } = await openVm();
    const seen: string[] = [];
    vm.subscribe((state) => seen.push(state.session));
    server.expired.add("s1");
    const state = await vm.setFilter("cat", { type: "value_set", values: ["alpha"] });
    expect(vm.sessionId).toBe("s2");
    expect(state.session).toBe("s2");
    expect(state.counter.selected).toBe(6); // fresh session starts unfiltered
    expect(seen).toEqual(["s2"]);
  });

  it("surfaces other HTTP errors", async () => {
    const server = new FakeServer();
    const vm = new ViewModel(new Api("", server.fetch), "fake");
    await vm.open();
    server.sessions.delete("s1");
    await expect(vm.clearFilter("cat")).rejects.toMatchObject({ status: 404 });
  });
});
