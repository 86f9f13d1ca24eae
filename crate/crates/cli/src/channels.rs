//! Colors read as radio channels.
//!
//! Each vertex is a node, each edge a link using one channel at each end.
//! The channel box of a node holds the channels at both ends of every link
//! it takes part in; interference-free operation needs every box rainbow.

use incol_core::{Color, Graph, IncidenceColoring, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelBox {
    pub node: VertexId,
    /// Channels on incident links, ascending, with repeats.
    pub channels: Vec<Color>,
    pub rainbow: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelReport {
    pub boxes: Vec<ChannelBox>,
}

impl ChannelReport {
    pub fn new(g: &Graph, c: &IncidenceColoring) -> ChannelReport {
        let boxes = g
            .vertices()
            .map(|node| {
                let mut channels: Vec<Color> =
                    g.incident(node).iter().flat_map(|&(_, e)| c.pair(e)).collect();
                channels.sort_unstable();
                let rainbow = channels.windows(2).all(|w| w[0] != w[1]);
                ChannelBox {
                    node,
                    channels,
                    rainbow,
                }
            })
            .collect();
        ChannelReport { boxes }
    }

    pub fn all_rainbow(&self) -> bool {
        self.boxes.iter().all(|b| b.rainbow)
    }

    /// One line per node: name, `rainbow` or `clash`, then the channels.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for b in &self.boxes {
            let tag = if b.rainbow { "rainbow" } else { "clash" };
            out.push_str(&names[b.node.index()]);
            out.push(' ');
            out.push_str(tag);
            for ch in &b.channels {
                out.push(' ');
                out.push_str(&ch.to_string());
            }
            out.push('\n');
        }
        out
    }
}
