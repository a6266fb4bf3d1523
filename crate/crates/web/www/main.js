import init, { analyze, spectrum, sweep } from "./pkg/ynoid_web.js";

const C = 2 / Math.sqrt(3);
const COLORS = ["#c0392b", "#2471a3", "#1e8449"];

const $ = (id) => document.getElementById(id);

function drawProfiles(data) {
  const canvas = $("profile");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const extent = 3.2 * data.geometry.c;
  const sx = canvas.width / (2 * extent);
  const sy = canvas.height / (2 * extent);
  const toPx = (x, z) => [canvas.width / 2 + x * sx, canvas.height / 2 - z * sy];

  ctx.strokeStyle = "#ddd";
  ctx.beginPath();
  ctx.moveTo(canvas.width / 2, 0);
  ctx.lineTo(canvas.width / 2, canvas.height);
  ctx.stroke();

  for (const p of data.profiles) {
    ctx.strokeStyle = COLORS[p.face - 1];
    ctx.lineWidth = 2;
    for (const side of [1, -1]) {
      ctx.beginPath();
      p.points.forEach(([r, z], i) => {
        const [x, y] = toPx(side * r, z);
        if (i === 0) ctx.moveTo(x, y);
        else ctx.lineTo(x, y);
      });
      ctx.stroke();
    }
  }
  ctx.fillStyle = "#000";
  for (const side of [1, -1]) {
    const [x, y] = toPx(side * data.geometry.c, 0);
    ctx.beginPath();
    ctx.arc(x, y, 3.5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function fmt(v) {
  return v === null ? "kernel" : v.toFixed(6);
}

function showModes(surface) {
  const rows = JSON.parse(spectrum(surface, C, 5));
  const table = $("modes");
  let html = "<tr><th>n</th><th>face</th><th>delta</th><th>c(delta - beta)</th></tr>";
  for (const r of rows) {
    html += `<tr class="face${r.face}"><td>${r.n}</td><td>${r.face}</td>` +
      `<td>${fmt(r.delta)}</td><td>${fmt(r.coefficient)}</td></tr>`;
  }
  table.innerHTML = html;
}

function show(surface) {
  $("error").textContent = "";
  try {
    const data = JSON.parse(analyze(surface, C));
    const r = data.report;
    const z = r.z_contrib;
    $("summary").textContent =
      `${data.geometry.tag}: index ${r.total_index}, nullity ${r.total_nullity} ` +
      `(fixed boundary ${r.fixed_boundary.join("+")}, Steklov ${r.steklov_total}, ` +
      `Z (${z.index}, ${z.nullity}))`;
    drawProfiles(data);
    showModes(surface);
  } catch (e) {
    $("error").textContent = String(e);
  }
}

function drawSweep() {
  const points = JSON.parse(sweep(120, C));
  const canvas = $("sweep-plot");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pad = 40;
  const w = canvas.width - 2 * pad;
  const h = canvas.height - 2 * pad;
  const x = (a) => pad + (a / (Math.PI / 3)) * w;
  const y = (v) => canvas.height - pad - (v / 6) * h;

  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w, h);
  ctx.fillStyle = "#333";
  ctx.font = "12px sans-serif";
  ctx.fillText("alpha", canvas.width / 2 - 15, canvas.height - 10);
  for (let v = 0; v <= 6; v++) ctx.fillText(String(v), 20, y(v) + 4);

  const series = [
    ["index", "#8e44ad", (p) => p.total_index],
    ["nullity", "#d35400", (p) => p.total_nullity],
    ["fixed boundary", "#7f8c8d", (p) => p.fixed_boundary.reduce((s, v) => s + v, 0)],
  ];
  series.forEach(([label, color, get], k) => {
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    points.forEach((p, i) => {
      if (i === 0) ctx.moveTo(x(p.alpha), y(get(p)));
      else ctx.lineTo(x(p.alpha), y(get(p)));
    });
    ctx.stroke();
    ctx.fillText(label, pad + 10, pad + 16 + 16 * k);
  });
  ctx.strokeStyle = "#bbb";
  ctx.setLineDash([4, 4]);
  ctx.beginPath();
  ctx.moveTo(x(Math.PI / 6), pad);
  ctx.lineTo(x(Math.PI / 6), pad + h);
  ctx.stroke();
  ctx.setLineDash([]);
}

await init();

const slider = $("alpha");
const onSlide = () => {
  const deg = Number(slider.value);
  $("alpha-value").textContent = `${deg.toFixed(1)} deg`;
  show(String((deg * Math.PI) / 180));
};
slider.addEventListener("input", onSlide);
document.querySelectorAll("button[data-surface]").forEach((b) =>
  b.addEventListener("click", () => show(b.dataset.surface)));
$("sweep").addEventListener("click", drawSweep);

onSlide();
drawSweep();
