/** Wire types mirroring the service's JSON payloads. */

export type FilterSpec =
  | { type: "value_set"; values: string[] }
  | { type: "range"; lo: number; hi: number }
  | { type: "bbox"; min_lat: number; min_lon: number; max_lat: number; max_lon: number }
  | { type: "term"; term: string }
  | { type: "path_prefix"; path: string[] };

export interface CategoricalBin {
  key: string;
  value: number;
}

export interface NumericBin {
  lo: number;
  hi: number;
  value: number;
}

export type Bin = CategoricalBin | NumericBin;

export function isCategorical(bin: Bin): bin is CategoricalBin {
  return (bin as CategoricalBin).key !== undefined;
}

export interface GroupData {
  dimension: string;
  bins: Bin[];
}

export interface RollupNode {
  path: string[];
  value: number;
  children: RollupNode[];
}

export interface TermCount {
  term: string;
  frequency: number;
}

export interface Cluster {
  zoom: number;
  cell: [number, number];
  count: number;
  centroid: [number, number];
  members: number[] | null;
}

export interface TablePage {
  rows: Record<string, unknown>[];
  matched: number;
  visible: number;
  offset: number;
  limit: number;
}

export type ComponentData =
  | GroupData
  | { root: RollupNode }
  | { terms: TermCount[] }
  | { zoom: number; clusters: Cluster[] }
  | TablePage;

export interface ComponentState {
  id: string;
  kind: string;
  dimension: string | null;
  data: ComponentData;
}

export interface StatePayload {
  session: string;
  counter: { selected: number; total: number };
  filters: Record<string, FilterSpec>;
  components: ComponentState[];
}

export function componentById(state: StatePayload, id: string): ComponentState {
  const found = state.components.find((c) => c.id === id);
  if (!found) throw new Error(`no component ${id} in payload`);
  return found;
}

export interface ComponentConfig {
  id: string;
  kind: string;
  dimension: string | null;
  options: Record<string, unknown>;
}

export interface ConfigSummary {
  title: string;
  schema: { name: string; kind: string }[];
  dimensions: { name: string; kind: string; columns: string[] }[];
  components: ComponentConfig[];
  map_elements: {
    title: string | null;
    legend: boolean;
    scale_bar: boolean;
    north_arrow: boolean;
    minimap: boolean;
    basemaps: string[];
  };
  palette: string[];
  record_count: number;
}

export interface SessionDoc {
  session: string;
  config: ConfigSummary;
  state: StatePayload;
}

export interface AppListing {
  name: string;
  title: string;
  records: number;
}
